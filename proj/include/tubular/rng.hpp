#pragma once

#include <cmath>
#include <cstdint>

namespace tubular {

/// splitmix64. Used instead of <random> engines/distributions because the
/// standard distributions are implementation-defined and the reports have
/// a byte-for-byte reproducibility contract.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }
};

/// Additive golden-ratio (Kronecker) sequence: a fixed-seed low-discrepancy
/// point set on [0, 1). Sample i is frac(offset + i * phi^-1).
struct KroneckerSequence {
    double offset;

    explicit KroneckerSequence(std::uint64_t seed) {
        Rng r(seed);
        offset = r.next_double();
    }

    double sample(int i) const {
        constexpr double kInvPhi = 0.6180339887498949;
        double v = offset + kInvPhi * double(i);
        return v - std::floor(v);
    }
};

}  // namespace tubular
