#pragma once

#include <cstdint>

#include "wiretap/rng.hpp"

namespace wiretap {

/// Euler-Mascheroni constant; E{ln g} = -gamma for unit-mean exponential g.
inline constexpr double kEulerGamma = 0.5772156649015329;

/// dBW -> watts.
inline double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

/// d^{-alpha} path loss factor. Throws std::domain_error for d <= 0 or
/// alpha < 0.
double path_gain(double d_m, double alpha);

/// Immutable physical configuration of the four-node network.
/// Distances in meters, noise powers in watts (convert from dBW at
/// ingestion), p_total in watts, p_tx = prior transmit probability.
/// d_jb is kept for fidelity to the measurement setup but no in-scope
/// formula consumes it (Bob cancels the jamming signal).
struct Scenario {
    double d_ab;
    double d_ae;
    double d_jb;
    double d_je;
    double alpha;
    double sigma2_b;
    double sigma2_e;
    double p_total;
    double p_tx;

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

/// Power allocation factor rho in [0,1]: data power = rho * P_t,
/// jamming power = (1 - rho) * P_t.
struct PowerSplit {
    double rho;

    void validate() const;
};

/// One joint sample of the four squared channel gains |h|^2; each is
/// unit-mean exponential and the four are mutually independent.
struct FadingDraw {
    double g_ab;
    double g_ae;
    double g_jb;
    double g_je;
};

/// Monte Carlo mean with its standard error.
struct McEstimate {
    double mean;
    double std_error;
    std::uint64_t n_samples;
};

/// Draws the four squared gains from the given stream.
FadingDraw sample_fading(RngStream& rng);

/// SINR at Bob: rho * P_t * g_ab * d_ab^{-alpha} / sigma_b^2.
/// Jamming is absent because Bob cancels the predefined jamming signal.
double sinr_bob(const Scenario& s, PowerSplit p, double g_ab);

/// SINR at Eve: the jamming term enters the denominator.
double sinr_eve(const Scenario& s, PowerSplit p, double g_ae, double g_je);

}  // namespace wiretap
