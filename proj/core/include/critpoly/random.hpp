#pragma once

#include <cstdint>
#include <random>

#include "critpoly/poly.hpp"

namespace critpoly {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`, e.g. (seed, trial) or (seed, restart).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t salt = 0) noexcept {
    return mix64(mix64(master ^ mix64(salt)) + index);
}

/// mt19937_64 with platform-independent real sampling (the standard
/// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform point in the closed disk of the given radius.
    Complex in_disk(double radius);

    /// Standard exponential variate.
    double exponential();

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace critpoly
