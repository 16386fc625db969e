#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gyrokit {

// Deterministic random source. The mapping from engine output to doubles is
// spelled out here instead of going through std::uniform_real_distribution,
// whose output is implementation-defined; reports must be reproducible
// byte-for-byte for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 42) : engine_(seed) {}

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace gyrokit
