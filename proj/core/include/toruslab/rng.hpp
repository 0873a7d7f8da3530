#pragma once

#include "toruslab/numbers.hpp"

#include <cstdint>
#include <vector>

namespace toruslab {

/// Deterministic seedable generator. All sampling in the repository flows
/// through this class; outputs depend only on the seed and the call
/// sequence, never on the platform (std distributions are avoided for
/// that reason).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed + 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool coin() { return (next() & 1) != 0; }

    /// Nonzero integer in [-mag, mag].
    Integer nonzero_int(long mag = 9) {
        long v = range(1, mag);
        return coin() ? Integer(v) : Integer(-v);
    }

    /// Nonzero rational with numerator in [-num_mag, num_mag] and
    /// denominator in [1, den_mag].
    Rational nonzero_rational(long num_mag = 9, long den_mag = 4) {
        return Rational(nonzero_int(num_mag), Integer(range(1, den_mag)));
    }

    /// Rational (possibly zero) with small height.
    Rational small_rational(long num_mag = 9, long den_mag = 4) {
        return Rational(Integer(range(-num_mag, num_mag)), Integer(range(1, den_mag)));
    }

    std::vector<Rational> small_vector(std::size_t n, long num_mag = 9, long den_mag = 4) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = small_rational(num_mag, den_mag);
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace toruslab
