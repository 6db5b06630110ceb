#pragma once

#include <cstdint>
#include <stdexcept>

#include "wiretap/model.hpp"
#include "wiretap/secrecy.hpp"

namespace wiretap::covert {

using secrecy::OptResult;

/// Raised when no power split satisfies the covertness constraint. Cannot
/// happen for well-formed scenarios (the constraint LHS diverges to -inf as
/// rho -> 0), but the guard stays for malformed inputs.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CovertConfig {
    double epsilon = 0.1;          // covertness slack, in (0,1)
    double bisect_tol = 1e-9;      // tolerance on rho
    std::uint64_t grid_points = 1000000;  // oracle resolution
};

/// Jensen lower bound on the covert rate:
///   P_psi1 * log2(1 + rho P_t e^{-gamma} / (d_ab^alpha sigma_b^2)),
/// strictly increasing in rho for p_tx > 0.
double covert_objective_lb(const Scenario& s, PowerSplit p);

/// Monte Carlo ergodic covert rate P_psi1 * E{log2(1 + SINR_b)}, same
/// trial-indexed stream contract as the secrecy estimator.
McEstimate covert_ergodic_rate_mc(const Scenario& s, PowerSplit p,
                                  std::uint64_t trials, std::uint64_t seed);

/// Largest rho in (0,1) satisfying the covertness constraint, found by
/// feasibility bisection: the constraint LHS is strictly increasing in rho,
/// so the feasible set is an interval anchored at 0. Returns 1 - bisect_tol
/// when the constraint holds arbitrarily close to 1.
double max_feasible_rho(const Scenario& s, const CovertConfig& cfg);

/// Covertness-constrained power optimizer: the objective is strictly
/// increasing in rho, so the optimum is the largest feasible rho.
OptResult covert_optimize(const Scenario& s, const CovertConfig& cfg);

}  // namespace wiretap::covert
