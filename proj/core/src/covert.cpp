#include "wiretap/covert.hpp"

#include <cmath>

#include "wiretap/detection.hpp"

namespace wiretap::covert {

double covert_objective_lb(const Scenario& s, PowerSplit p) {
    const double kb = std::pow(s.d_ab, s.alpha) * s.sigma2_b;
    return s.p_tx *
           std::log2(1.0 + p.rho * s.p_total * std::exp(-kEulerGamma) / kb);
}

McEstimate covert_ergodic_rate_mc(const Scenario& s, PowerSplit p,
                                  std::uint64_t trials, std::uint64_t seed) {
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const FadingDraw d = sample_fading(rng);
        const double r = s.p_tx * std::log2(1.0 + sinr_bob(s, p, d.g_ab));
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

double max_feasible_rho(const Scenario& s, const CovertConfig& cfg) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
        throw std::invalid_argument("max_feasible_rho: epsilon must be in (0,1)");
    const double ln_eps = std::log(cfg.epsilon);
    auto feasible = [&](double rho) {
        return detection::covertness_lhs(s, {rho}) <= ln_eps;
    };
    constexpr double kRhoFloor = 1e-9;
    const double hi0 = 1.0 - cfg.bisect_tol;
    if (feasible(hi0)) return hi0;
    if (!feasible(kRhoFloor))
        throw InfeasibleError("max_feasible_rho: no covert power split");
    double lo = kRhoFloor, hi = hi0;
    while (hi - lo > cfg.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;  // last known-feasible point
}

OptResult covert_optimize(const Scenario& s, const CovertConfig& cfg) {
    OptResult res;
    res.rho_star = max_feasible_rho(s, cfg);
    res.objective = covert_objective_lb(s, {res.rho_star});
    res.iterates = {res.rho_star};
    res.converged = true;
    return res;
}

}  // namespace wiretap::covert
