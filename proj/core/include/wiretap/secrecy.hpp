#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wiretap/model.hpp"

namespace wiretap::secrecy {

/// Settings for the iterative power allocation loop.
struct ScaConfig {
    double rho_init = 0.5;
    double omega = 1e-6;        // stop when |rho(s+1) - rho(s)| <= omega
    std::uint64_t max_iters = 100;
    double inner_tol = 1e-10;   // tolerance of the 1-D subproblem solver
};

struct OptResult {
    double rho_star;
    double objective;               // bits/s/Hz
    std::vector<double> iterates;   // rho(0), rho(1), ...
    bool converged;
};

/// [log2(1+SINR_b) - log2(1+SINR_e)]^+ for one fading realization.
double instantaneous_secrecy_rate(const Scenario& s, PowerSplit p,
                                  const FadingDraw& d);

/// Monte Carlo estimate of the ergodic secrecy rate over i.i.d. fading.
/// Trials use per-index streams keyed by (seed, trial), so estimates are
/// common-random-number comparable across rho and reproducible under any
/// parallel schedule. `clamp = false` drops the [.]^+ and averages the raw
/// log-SINR difference (the bound target of the analysis).
McEstimate ergodic_secrecy_rate_mc(const Scenario& s, PowerSplit p,
                                   std::uint64_t trials, std::uint64_t seed,
                                   bool clamp = true);

/// Jensen lower bound R_lb(rho) on the ergodic (unclamped) secrecy rate:
///   (1/ln2) { ln(1 + rho P_t e^{-g} / (d_ab^a s_b^2))
///           - ln(s_e^2 + (1-rho) P_t d_je^{-a} + rho P_t d_ae^{-a})
///           + ln(s_e^2 + (1-rho) P_t d_je^{-a} e^{-g}) },   g = 0.57721...
/// May be negative.
double secrecy_lower_bound(const Scenario& s, PowerSplit p);

/// Difference-of-concave split R_lb = concave_part - subtracted_part.
/// Both parts are concave in rho; the first includes the -ln(d_ab^a s_b^2)
/// constant so the identity holds exactly.
std::pair<double, double> dc_parts(const Scenario& s, PowerSplit p);

/// d/drho of the subtracted concave part.
double phi_gradient(const Scenario& s, PowerSplit p);

/// Concave surrogate: concave_part(rho) minus the tangent of the subtracted
/// part at rho_prev. Tight at rho = rho_prev and a global minorant of R_lb.
double surrogate_objective(const Scenario& s, double rho, double rho_prev);

/// Maximizer of the surrogate over [0,1] (derivative bisection; the
/// surrogate is strictly concave so the stationary point is unique).
double solve_surrogate(const Scenario& s, double rho_prev, double inner_tol);

/// Iterative power allocation: repeatedly maximize the surrogate at the
/// current iterate until |rho(s+1) - rho(s)| <= omega. R_lb is
/// non-decreasing along the iterates (MM ascent). Exhausting max_iters
/// returns converged = false, not an error.
OptResult sca_optimize(const Scenario& s, const ScaConfig& cfg);

}  // namespace wiretap::secrecy
