#include "wiretap/secrecy.hpp"

#include <cmath>

namespace wiretap::secrecy {

namespace {

constexpr double kLn2 = 0.6931471805599453;

struct Coeffs {
    double kb;   // d_ab^alpha * sigma_b^2
    double pa;   // P_t * d_ae^{-alpha}
    double pj;   // P_t * d_je^{-alpha}
};

Coeffs coeffs(const Scenario& s) {
    return {std::pow(s.d_ab, s.alpha) * s.sigma2_b,
            s.p_total * path_gain(s.d_ae, s.alpha),
            s.p_total * path_gain(s.d_je, s.alpha)};
}

const double kExpNegGamma = std::exp(-kEulerGamma);

}  // namespace

double instantaneous_secrecy_rate(const Scenario& s, PowerSplit p,
                                  const FadingDraw& d) {
    const double rb = std::log2(1.0 + sinr_bob(s, p, d.g_ab));
    const double re = std::log2(1.0 + sinr_eve(s, p, d.g_ae, d.g_je));
    return std::fmax(rb - re, 0.0);
}

McEstimate ergodic_secrecy_rate_mc(const Scenario& s, PowerSplit p,
                                   std::uint64_t trials, std::uint64_t seed,
                                   bool clamp) {
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const FadingDraw d = sample_fading(rng);
        double r = std::log2(1.0 + sinr_bob(s, p, d.g_ab)) -
                   std::log2(1.0 + sinr_eve(s, p, d.g_ae, d.g_je));
        if (clamp) r = std::fmax(r, 0.0);
        sum += r;
        sumsq += r * r;
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    double se = 0.0;
    if (trials > 1) {
        const double var = std::fmax(sumsq - n * mean * mean, 0.0) / (n - 1.0);
        se = std::sqrt(var / n);
    }
    return {mean, se, trials};
}

double secrecy_lower_bound(const Scenario& s, PowerSplit p) {
    const Coeffs c = coeffs(s);
    const double rho = p.rho;
    return (std::log1p(rho * s.p_total * kExpNegGamma / c.kb) -
            std::log(s.sigma2_e + (1.0 - rho) * c.pj + rho * c.pa) +
            std::log(s.sigma2_e + (1.0 - rho) * c.pj * kExpNegGamma)) /
           kLn2;
}

std::pair<double, double> dc_parts(const Scenario& s, PowerSplit p) {
    const Coeffs c = coeffs(s);
    const double rho = p.rho;
    const double concave_part =
        (std::log(rho * s.p_total * kExpNegGamma + c.kb) +
         std::log(s.sigma2_e + (1.0 - rho) * c.pj * kExpNegGamma) -
         std::log(c.kb)) /
        kLn2;
    const double subtracted =
        std::log(s.sigma2_e + (1.0 - rho) * c.pj + rho * c.pa) / kLn2;
    return {concave_part, subtracted};
}

double phi_gradient(const Scenario& s, PowerSplit p) {
    const Coeffs c = coeffs(s);
    return (c.pa - c.pj) /
           (s.sigma2_e + (1.0 - p.rho) * c.pj + p.rho * c.pa) / kLn2;
}

double surrogate_objective(const Scenario& s, double rho, double rho_prev) {
    const auto [concave_part, _] = dc_parts(s, {rho});
    const auto [__, phi_prev] = dc_parts(s, {rho_prev});
    const double grad = phi_gradient(s, {rho_prev});
    return concave_part - (phi_prev + grad * (rho - rho_prev));
}

namespace {

// d/drho of the concave part of the DC split.
double concave_part_gradient(const Scenario& s, double rho) {
    const Coeffs c = coeffs(s);
    return (s.p_total * kExpNegGamma /
                (rho * s.p_total * kExpNegGamma + c.kb) -
            c.pj * kExpNegGamma /
                (s.sigma2_e + (1.0 - rho) * c.pj * kExpNegGamma)) /
           kLn2;
}

}  // namespace

double solve_surrogate(const Scenario& s, double rho_prev, double inner_tol) {
    const double grad_phi = phi_gradient(s, {rho_prev});
    auto deriv = [&](double rho) {
        return concave_part_gradient(s, rho) - grad_phi;
    };
    // deriv is strictly decreasing (concave surrogate).
    if (deriv(0.0) <= 0.0) return 0.0;
    if (deriv(1.0) >= 0.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > inner_tol) {
        const double mid = 0.5 * (lo + hi);
        (deriv(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

OptResult sca_optimize(const Scenario& s, const ScaConfig& cfg) {
    OptResult res;
    res.iterates.push_back(cfg.rho_init);
    res.converged = false;
    double rho = cfg.rho_init;
    for (std::uint64_t it = 0; it < cfg.max_iters; ++it) {
        const double next = solve_surrogate(s, rho, cfg.inner_tol);
        res.iterates.push_back(next);
        const bool done = std::fabs(next - rho) <= cfg.omega;
        rho = next;
        if (done) {
            res.converged = true;
            break;
        }
    }
    res.rho_star = rho;
    res.objective = secrecy_lower_bound(s, {rho});
    return res;
}

}  // namespace wiretap::secrecy
