#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wiretap/covert.hpp"
#include "wiretap/model.hpp"
#include "wiretap/secrecy.hpp"

namespace wiretap::experiment {

enum class Mode { Secrecy, Covert, Both };

/// One-parameter sweep; parameter is one of
/// {d_ab, d_je, d_ae, p_total, epsilon}.
struct SweepSpec {
    std::string parameter = "d_ab";
    double lo = 2.0;
    double hi = 10.0;
    std::uint64_t steps = 9;

    double at(std::uint64_t i) const {
        if (steps == 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(steps - 1);
    }
};

struct ExperimentConfig {
    Scenario scenario;  // noise already converted to watts
    Mode mode = Mode::Both;
    std::vector<double> epsilons = {0.1, 0.01, 0.001};
    SweepSpec sweep;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string out = "results.csv";

    secrecy::ScaConfig sca;
    double bisect_tol = 1e-9;
    std::uint64_t oracle_rho_points = 201;  // exhaustive-baseline resolution
    unsigned n_threads = 0;                 // 0 = hardware concurrency

    void validate() const;
};

/// Table I settings: all distances 5 m, alpha 4, noise -30 dBW, P_t 1.5 W,
/// transmit prior 0.5, epsilon in {0.1, 0.01, 0.001}.
ExperimentConfig table1_preset();

/// Parses the JSON config document (noise given in dBW, converted here).
/// Unknown sweep parameters or invalid values throw std::invalid_argument.
ExperimentConfig parse_config(const std::string& json_text);

struct ExperimentOutput {
    std::vector<std::string> files;
    std::string summary;  // curve-averaged gap report, one line per file
};

/// Runs the configured sweep and writes one CSV per mode (covert mode: one
/// per epsilon). Deterministic for a given config and seed, independent of
/// n_threads. Returns the written paths.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// Condensed oracle verification suite; prints one pass/fail line per check
/// to `os` and returns true iff all checks pass.
bool run_verify(std::ostream& os, std::uint64_t seed);

/// Serializes a double with 12 significant digits (CSV number format).
std::string format_g12(double v);

}  // namespace wiretap::experiment
