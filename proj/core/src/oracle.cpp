#include "wiretap/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wiretap::oracle {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
    double kronrod;
    double err;
};

GkResult gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double fsum = (i == 7) ? f(c)
                                     : f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

void integrate_adaptive(const std::function<double(double)>& f, double lo,
                        double hi, double tol, int depth, double& acc) {
    const GkResult r = gk15(f, lo, hi);
    const double width = hi - lo;
    // A peak much narrower than the panel can fall between the nodes, which
    // yields a tiny value with a tiny error estimate. An endpoint magnitude
    // far above the panel estimate exposes the miss and forces a split.
    const double edge =
        std::fmax(std::fabs(f(lo)), std::fabs(f(hi))) * width;
    const bool suspicious =
        edge > 100.0 * std::fmax(std::fabs(r.kronrod), tol);
    // The absolute tolerance halves per split, so panels of a large-valued
    // integrand can sit below their own roundoff floor; a panel resolved to
    // machine precision is accepted regardless.
    const bool precise = r.err <= tol || r.err <= 5e-15 * std::fabs(r.kronrod);
    if ((precise && !suspicious) || width < 1e-300) {
        acc += r.kronrod;
        return;
    }
    if (depth > 60)
        throw std::runtime_error("integrate: quadrature did not converge");
    const double mid = 0.5 * (lo + hi);
    integrate_adaptive(f, lo, mid, 0.5 * tol, depth + 1, acc);
    integrate_adaptive(f, mid, hi, 0.5 * tol, depth + 1, acc);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
    if (!(hi > lo)) return 0.0;
    double acc = 0.0;
    integrate_adaptive(f, lo, hi, abs_tol, 0, acc);
    return acc;
}

OptResult grid_search_secrecy(const Scenario& s, const GridSpec& g,
                              std::uint64_t trials, std::uint64_t seed) {
    // Common random numbers: one fading table reused for every grid point,
    // drawn with the same trial-indexed streams as the MC estimator.
    std::vector<FadingDraw> draws(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        draws[t] = sample_fading(rng);
    }
    double best_rho = g.at(0);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < g.points; ++i) {
        const PowerSplit p{g.at(i)};
        double sum = 0.0;
        for (const FadingDraw& d : draws)
            sum += secrecy::instantaneous_secrecy_rate(s, p, d);
        const double mean = sum / static_cast<double>(trials);
        if (mean > best) {
            best = mean;
            best_rho = p.rho;
        }
    }
    return {best_rho, best, {best_rho}, true};
}

OptResult grid_search_covert(const Scenario& s, const CovertConfig& cfg,
                             const GridSpec& g) {
    const double ln_eps = std::log(cfg.epsilon);
    double best_rho = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::uint64_t i = 0; i < g.points; ++i) {
        const double rho = g.at(i);
        if (!(rho > 0.0 && rho < 1.0)) continue;
        if (detection::covertness_lhs(s, {rho}) > ln_eps) continue;
        const double val = covert::covert_objective_lb(s, {rho});
        if (val > best) {
            best = val;
            best_rho = rho;
        }
        any = true;
    }
    if (!any)
        throw covert::InfeasibleError("grid_search_covert: no covert grid point");
    return {best_rho, best, {best_rho}, true};
}

std::pair<double, double> numeric_error_probs(const Scenario& s, PowerSplit p,
                                              double theta) {
    constexpr double kTol = 1e-10;
    const auto sc = detection::eve_scales(s, p);
    const double span = 60.0 * std::fmax(sc.a, sc.b);
    const double x = std::fmax(theta - s.sigma2_e, 0.0);
    auto pdf0 = [&](double lam) {
        return detection::lambda_pdf(s, p, detection::Hypothesis::Psi0, lam);
    };
    auto pdf1 = [&](double lam) {
        return detection::lambda_pdf(s, p, detection::Hypothesis::Psi1, lam);
    };
    const double p_fa =
        (theta - s.sigma2_e < 0.0) ? 1.0 : integrate(pdf0, x, x + span, kTol);
    // The hypoexponential density has structure at the smaller of the two
    // scales; split there so a narrow rise is not skipped.
    const double cut = std::fmin(45.0 * std::fmin(sc.a, sc.b), 0.5 * x);
    const double p_md =
        (x == 0.0) ? 0.0
                   : integrate(pdf1, 0.0, cut, 0.5 * kTol) +
                         integrate(pdf1, cut, x, 0.5 * kTol);
    return {p_fa, p_md};
}

double grid_min_threshold(const Scenario& s, PowerSplit p, const GridSpec& g) {
    double best_theta = g.at(0);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < g.points; ++i) {
        const double theta = g.at(i);
        const double v = detection::error_sum(s, p, theta);
        if (v < best) {
            best = v;
            best_theta = theta;
        }
    }
    return best_theta;
}

std::vector<double> grid_min_threshold_ties(const Scenario& s, PowerSplit p,
                                            const GridSpec& g) {
    const double theta_min = grid_min_threshold(s, p, g);
    const double v_min = detection::error_sum(s, p, theta_min);
    std::vector<double> ties;
    for (std::uint64_t i = 0; i < g.points; ++i) {
        const double theta = g.at(i);
        if (detection::error_sum(s, p, theta) - v_min <= 1e-12)
            ties.push_back(theta);
    }
    return ties;
}

DetectionMetrics finite_n_detector_sim(const Scenario& s, PowerSplit p,
                                       double theta, std::uint64_t n,
                                       std::uint64_t trials, std::uint64_t seed,
                                       bool symbol_level) {
    const auto sc = detection::eve_scales(s, p);
    auto chi2_2n = [&](RngStream& rng) {
        if (!symbol_level) return rng.next_chi2_2n(n);
        double acc = 0.0;
        for (std::uint64_t i = 0; i < 2 * n; ++i) {
            const double z = rng.next_normal();
            acc += z * z;
        }
        return acc;
    };
    const double inv2n = 1.0 / static_cast<double>(2 * n);
    std::uint64_t fa = 0, md = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const double lam0 = sc.b * rng.next_exponential();
        if ((s.sigma2_e + lam0) * chi2_2n(rng) * inv2n > theta) ++fa;
        const double lam1 = sc.a * rng.next_exponential() +
                            sc.b * rng.next_exponential();
        if ((s.sigma2_e + lam1) * chi2_2n(rng) * inv2n < theta) ++md;
    }
    const double nt = static_cast<double>(trials);
    return {static_cast<double>(fa) / nt, static_cast<double>(md) / nt, theta};
}

McEstimate mc_log_fading_mean(std::uint64_t trials, std::uint64_t seed) {
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const double v = std::log(rng.next_exponential());
        sum += v;
        sumsq += v * v;
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

}  // namespace wiretap::oracle
