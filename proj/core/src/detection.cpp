#include "wiretap/detection.hpp"

#include <cmath>
#include <stdexcept>

namespace wiretap::detection {

EveScales eve_scales(const Scenario& s, PowerSplit p) {
    return {p.rho * s.p_total * path_gain(s.d_ae, s.alpha),
            (1.0 - p.rho) * s.p_total * path_gain(s.d_je, s.alpha)};
}

double lambda_pdf(const Scenario& s, PowerSplit p, Hypothesis h, double lam) {
    if (lam < 0.0) return 0.0;
    const EveScales sc = eve_scales(s, p);
    if (h == Hypothesis::Psi0) {
        if (!(sc.b > 0.0))
            throw std::domain_error("lambda_pdf: Psi0 requires rho < 1");
        return std::exp(-lam / sc.b) / sc.b;
    }
    if (!(sc.a > 0.0 && sc.b > 0.0))
        throw std::domain_error("lambda_pdf: Psi1 requires rho in (0,1)");
    if (degenerate(sc)) {
        return lam * std::exp(-lam / sc.a) / (sc.a * sc.a);
    }
    // (e^{-lam/a} - e^{-lam/b}) / (a - b), factored through the slower
    // exponent so the difference keeps its digits when a ~ b.
    const double lo = std::fmin(sc.a, sc.b);
    const double hi = std::fmax(sc.a, sc.b);
    return std::exp(-lam / hi) * -std::expm1(-lam * (hi - lo) / (lo * hi)) /
           (hi - lo);
}

double prob_false_alarm(const Scenario& s, PowerSplit p, double theta) {
    const double x = theta - s.sigma2_e;
    if (x < 0.0) return 1.0;
    const EveScales sc = eve_scales(s, p);
    if (!(sc.b > 0.0))
        throw std::domain_error("prob_false_alarm: requires rho < 1");
    return std::exp(-x / sc.b);
}

namespace {

// (hi e^{-x/hi} - lo e^{-x/lo}) / (hi - lo), the scale-weighted exponential
// difference of the missed-detection closed form, arranged as
// e^{-x/hi} (1 + lo (1 - e^{-x d}) / (hi - lo)) with d = (hi-lo)/(lo hi);
// stable for hi ~ lo.
double md_complement(double x, double lo, double hi) {
    const double d = (hi - lo) / (lo * hi);
    return std::exp(-x / hi) * (1.0 + lo * -std::expm1(-x * d) / (hi - lo));
}

}  // namespace

double prob_missed_detection(const Scenario& s, PowerSplit p, double theta) {
    const double x = theta - s.sigma2_e;
    if (x <= 0.0) return 0.0;
    const EveScales sc = eve_scales(s, p);
    if (!(sc.a > 0.0 && sc.b > 0.0))
        throw std::domain_error("prob_missed_detection: requires rho in (0,1)");
    if (degenerate(sc)) {
        // Erlang-2 CDF.
        const double r = x / sc.a;
        return 1.0 - std::exp(-r) * (1.0 + r);
    }
    const double lo = std::fmin(sc.a, sc.b);
    const double hi = std::fmax(sc.a, sc.b);
    return 1.0 - md_complement(x, lo, hi);
}

double error_sum(const Scenario& s, PowerSplit p, double theta) {
    const double x = theta - s.sigma2_e;
    if (x < 0.0) return 1.0;
    const EveScales sc = eve_scales(s, p);
    if (!(sc.a > 0.0 && sc.b > 0.0))
        throw std::domain_error("error_sum: requires rho in (0,1)");
    if (degenerate(sc)) {
        const double r = x / sc.a;
        return std::exp(-r) + 1.0 - std::exp(-r) * (1.0 + r);
    }
    const double lo = std::fmin(sc.a, sc.b);
    const double hi = std::fmax(sc.a, sc.b);
    return std::exp(-x / sc.b) + 1.0 - md_complement(x, lo, hi);
}

double optimal_threshold(const Scenario& s, PowerSplit p) {
    if (!(p.rho > 0.0 && p.rho < 1.0))
        throw std::domain_error("optimal_threshold: requires rho in (0,1)");
    const EveScales sc = eve_scales(s, p);
    if (degenerate(sc)) return sc.a + s.sigma2_e;
    // a b ln(b/a) / (b - a) = b log1p(t)/t with t = (b-a)/a.
    const double t = (sc.b - sc.a) / sc.a;
    if (1.0 + t <= 0.0)
        return sc.a * sc.b * std::log(sc.b / sc.a) / (sc.b - sc.a) +
               s.sigma2_e;
    return sc.b * std::log1p(t) / t + s.sigma2_e;
}

double covertness_lhs(const Scenario& s, PowerSplit p) {
    if (!(p.rho > 0.0 && p.rho < 1.0))
        throw std::domain_error("covertness_lhs: requires rho in (0,1)");
    const EveScales sc = eve_scales(s, p);
    if (degenerate(sc)) return -1.0;
    // b ln(b/a) / (a - b) = -(b/a) log1p(t)/t with t = (b-a)/a.
    const double t = (sc.b - sc.a) / sc.a;
    if (1.0 + t <= 0.0)  // b/a below machine precision; use the direct form
        return sc.b * std::log(sc.b / sc.a) / (sc.a - sc.b);
    return -(sc.b / sc.a) * std::log1p(t) / t;
}

bool is_covert(const Scenario& s, PowerSplit p, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("is_covert: eps must be in (0,1)");
    return covertness_lhs(s, p) <= std::log(eps);
}

}  // namespace wiretap::detection
