#pragma once

#include <cmath>
#include <cstdint>

namespace wiretap {

/// Counter-based random stream. Each (seed, stream) pair yields an
/// independent deterministic sequence, so trial-indexed Monte Carlo is
/// reproducible under any parallel schedule: stream i always produces the
/// same draws no matter which thread runs it or in what order.
///
/// The generator hashes (key, counter) with the SplitMix64 finalizer on a
/// Weyl sequence; no state is shared between streams.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : key_(derive_key(seed, stream)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (counter_++) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on the open interval (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Unit-mean exponential variate.
    double next_exponential() { return -std::log(next_uniform()); }

    /// Standard normal variate (Box-Muller, pair cached).
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Gamma(shape, 1) for shape >= 1 via Marsaglia-Tsang squeeze.
    double next_gamma(double shape) {
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = next_uniform();
            double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Chi-squared with 2n degrees of freedom (= Gamma(n, 2)).
    double next_chi2_2n(std::uint64_t n) {
        return 2.0 * next_gamma(static_cast<double>(n));
    }

private:
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        z += stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL;
        z = (z ^ (z >> 29)) * 0xFF51AFD7ED558CCDULL;
        z = (z ^ (z >> 32)) * 0xC4CEB9FE1A85EC53ULL;
        return z ^ (z >> 32);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wiretap
