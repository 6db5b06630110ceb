#pragma once

#include "wiretap/model.hpp"

namespace wiretap::detection {

/// Eve's binary hypotheses: Psi0 = Alice silent, Psi1 = Alice transmitting.
enum class Hypothesis { Psi0, Psi1 };

/// False-alarm / missed-detection pair at a given power threshold (watts,
/// absolute, including the noise floor sigma_e^2).
struct DetectionMetrics {
    double p_fa;
    double p_md;
    double threshold;
};

/// Mean excess powers at Eve: a = rho*P_t*d_ae^{-alpha} (data component),
/// b = (1-rho)*P_t*d_je^{-alpha} (jamming component). Every closed form in
/// this module is a function of (a, b, sigma_e^2).
struct EveScales {
    double a;
    double b;
};

EveScales eve_scales(const Scenario& s, PowerSplit p);

/// Relative tolerance below which a and b are treated as equal and the
/// removable-singularity limit forms are used.
inline constexpr double kDegenerateTol = 1e-9;

inline bool degenerate(const EveScales& sc) {
    return std::fabs(sc.a - sc.b) <= kDegenerateTol * std::fmax(sc.a, sc.b);
}

/// Density of the excess received power lambda at Eve under the given
/// hypothesis: exponential(b) under Psi0, hypoexponential(a, b) under Psi1
/// (Erlang-2 limit when a ~ b).
double lambda_pdf(const Scenario& s, PowerSplit p, Hypothesis h, double lam);

/// P(decide Psi1 | Psi0) of the asymptotic power detector at threshold theta.
double prob_false_alarm(const Scenario& s, PowerSplit p, double theta);

/// P(decide Psi0 | Psi1) at threshold theta.
double prob_missed_detection(const Scenario& s, PowerSplit p, double theta);

/// P_FA + P_MD; equals 1 for theta < sigma_e^2.
double error_sum(const Scenario& s, PowerSplit p, double theta);

/// Eve's error-sum-minimizing threshold:
///   theta* = (a*b/(b-a)) ln(b/a) + sigma_e^2, always >= sigma_e^2.
/// Throws std::domain_error for rho in {0, 1}.
double optimal_threshold(const Scenario& s, PowerSplit p);

/// Left-hand side of the covertness constraint after substituting theta*:
///   b ln(b/a) / (a-b),
/// dimensionless, strictly negative, increasing in rho, with limit -1 at
/// a = b. Satisfies error_sum(theta*) = 1 - exp(lhs).
double covertness_lhs(const Scenario& s, PowerSplit p);

/// True iff covertness_lhs <= ln(eps), i.e. Eve's best error sum >= 1 - eps.
bool is_covert(const Scenario& s, PowerSplit p, double eps);

}  // namespace wiretap::detection
