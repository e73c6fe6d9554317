#ifndef REPEATERLAB_RNG_HPP
#define REPEATERLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "repeaterlab/errors.hpp"

namespace repeaterlab {

/// Deterministic random layer. Distribution transforms are written out
/// here because the standard distributions are implementation-defined;
/// results must be bit-identical for a given seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream i derived from a master seed.
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(splitmix64(master_seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Number of Bernoulli(p) attempts up to and including the first
    /// success; support {1, 2, ...}. Returned as double: for very small
    /// p the count exceeds the integer range.
    double geometric(double p) {
        if (!(p > 0.0) || p > 1.0)
            throw ZeroProbabilityError("geometric draw requires success probability in (0, 1]");
        if (p == 1.0) return 1.0;
        const double u = uniform();
        const double k = std::ceil(std::log1p(-u) / std::log1p(-p));
        return k < 1.0 ? 1.0 : k;
    }

    /// Standard normal via Box-Muller (one value per call, cached pair).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace repeaterlab

#endif
