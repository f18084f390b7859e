#include "abcnet/rng.hpp"

#include <limits>
#include <stdexcept>

namespace abcnet {

std::uint64_t RandomSource::uniform_excluding(std::uint64_t n, std::uint64_t excl) {
    if (n < 2 || excl >= n) {
        throw std::invalid_argument("uniform_excluding: need n >= 2 and excl < n");
    }
    const std::uint64_t u = uniform_below(n - 1);
    return u < excl ? u : u + 1;
}

double SeededRng::uniform_real(double lo, double hi) {
    // 53 mantissa bits -> u in [0, 1) with no double rounding.
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

std::uint64_t SeededRng::uniform_below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_below: n must be >= 1");
    }
    // Reject the tail that would bias the modulo.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t r = gen_();
    while (r > limit) {
        r = gen_();
    }
    return r % n;
}

}  // namespace abcnet
