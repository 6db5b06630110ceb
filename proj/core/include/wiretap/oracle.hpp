#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wiretap/covert.hpp"
#include "wiretap/detection.hpp"
#include "wiretap/model.hpp"
#include "wiretap/secrecy.hpp"

namespace wiretap::oracle {

using covert::CovertConfig;
using detection::DetectionMetrics;
using secrecy::OptResult;

struct GridSpec {
    double lo;
    double hi;
    std::uint64_t points;     // >= 2
    bool log_spaced = false;  // geometric spacing; requires lo > 0

    double at(std::uint64_t i) const {
        const double t =
            static_cast<double>(i) / static_cast<double>(points - 1);
        if (log_spaced) return lo * std::pow(hi / lo, t);
        return lo + (hi - lo) * t;
    }
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi] to the
/// given absolute tolerance. Throws std::runtime_error on non-convergence.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);

/// Exhaustive search on the ergodic secrecy objective: evaluates the Monte
/// Carlo estimator at every grid point with common random numbers and
/// returns the argmax.
OptResult grid_search_secrecy(const Scenario& s, const GridSpec& g,
                              std::uint64_t trials, std::uint64_t seed);

/// Exhaustive search on the covert objective over the covert subset of the
/// grid. Throws covert::InfeasibleError if no grid point is covert.
OptResult grid_search_covert(const Scenario& s, const CovertConfig& cfg,
                             const GridSpec& g);

/// (P_FA, P_MD) by numerical quadrature of the excess-power density over
/// the two decision regions; independent of the closed forms.
std::pair<double, double> numeric_error_probs(const Scenario& s, PowerSplit p,
                                              double theta);

/// Grid argmin of the detector error sum.
double grid_min_threshold(const Scenario& s, PowerSplit p, const GridSpec& g);

/// Grid points whose error sum lies within 1e-12 of the grid minimum
/// (flat-minimum report).
std::vector<double> grid_min_threshold_ties(const Scenario& s, PowerSplit p,
                                            const GridSpec& g);

/// Finite-blocklength detector simulation: per trial, draws the fading
/// gains, forms the per-slot average-power statistic
/// (sigma_e^2 + lambda) * chi2_{2n} / (2n) and applies the threshold test
/// under both hypotheses. `symbol_level` replaces the direct chi-squared
/// draw with a sum of 2n squared Gaussians (slow; cross-check path for small
/// n).
DetectionMetrics finite_n_detector_sim(const Scenario& s, PowerSplit p,
                                       double theta, std::uint64_t n,
                                       std::uint64_t trials, std::uint64_t seed,
                                       bool symbol_level = false);

/// Monte Carlo mean of ln(g) for unit-mean exponential g (converges to
/// minus the Euler-Mascheroni constant).
McEstimate mc_log_fading_mean(std::uint64_t trials, std::uint64_t seed);

}  // namespace wiretap::oracle
