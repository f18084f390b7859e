#pragma once

#include <cstdint>
#include <random>

namespace abcnet {

/// Source of the random draws used by the engine. The engine asks for
/// exactly two primitives; tests substitute scripted or recording
/// implementations to force or replay draw sequences.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform double in [lo, hi).
    virtual double uniform_real(double lo, double hi) = 0;

    /// Uniform integer in [0, n). n must be >= 1.
    virtual std::uint64_t uniform_below(std::uint64_t n) = 0;

    /// Uniform integer in [0, n) \ {excl}, using a single uniform_below
    /// draw: u from [0, n-1), shifted past excl. n must be >= 2, excl < n.
    std::uint64_t uniform_excluding(std::uint64_t n, std::uint64_t excl);
};

/// Deterministic generator backing a run: mt19937_64 seeded once.
/// Draw mapping (stable across runs with the same seed):
///   uniform_real(lo, hi) = lo + (gen() >> 11) * 2^-53 * (hi - lo)
///   uniform_below(n)     = rejection sampling on gen() to avoid modulo bias
/// Copyable; a copy continues the same stream independently.
class SeededRng final : public RandomSource {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    double uniform_real(double lo, double hi) override;
    std::uint64_t uniform_below(std::uint64_t n) override;

private:
    std::mt19937_64 gen_;
};

}  // namespace abcnet
