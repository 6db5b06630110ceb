#include "wiretap/model.hpp"

#include <cmath>
#include <stdexcept>

namespace wiretap {

double path_gain(double d_m, double alpha) {
    if (d_m <= 0.0) throw std::domain_error("path_gain: distance must be > 0");
    if (alpha < 0.0) throw std::domain_error("path_gain: alpha must be >= 0");
    return std::pow(d_m, -alpha);
}

void Scenario::validate() const {
    if (!(d_ab > 0.0 && d_ae > 0.0 && d_jb > 0.0 && d_je > 0.0))
        throw std::invalid_argument("Scenario: distances must be > 0");
    if (!(alpha > 0.0))
        throw std::invalid_argument("Scenario: alpha must be > 0");
    if (!(sigma2_b > 0.0 && sigma2_e > 0.0))
        throw std::invalid_argument("Scenario: noise powers must be > 0");
    if (!(p_total > 0.0))
        throw std::invalid_argument("Scenario: p_total must be > 0");
    if (!(p_tx >= 0.0 && p_tx <= 1.0))
        throw std::invalid_argument("Scenario: p_tx must be in [0,1]");
}

void PowerSplit::validate() const {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("PowerSplit: rho must be in [0,1]");
}

FadingDraw sample_fading(RngStream& rng) {
    FadingDraw d;
    d.g_ab = rng.next_exponential();
    d.g_ae = rng.next_exponential();
    d.g_jb = rng.next_exponential();
    d.g_je = rng.next_exponential();
    return d;
}

double sinr_bob(const Scenario& s, PowerSplit p, double g_ab) {
    return p.rho * s.p_total * g_ab * path_gain(s.d_ab, s.alpha) / s.sigma2_b;
}

double sinr_eve(const Scenario& s, PowerSplit p, double g_ae, double g_je) {
    double signal = p.rho * s.p_total * g_ae * path_gain(s.d_ae, s.alpha);
    double jam = (1.0 - p.rho) * s.p_total * g_je * path_gain(s.d_je, s.alpha);
    return signal / (jam + s.sigma2_e);
}

}  // namespace wiretap
