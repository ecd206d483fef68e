#include "llmgrid/core/rng.hpp"

#include <cassert>
#include <cmath>

namespace llmgrid {

std::uint64_t DetRng::below(std::uint64_t bound) {
    assert(bound > 0);
    // Rejection sampling to kill modulo bias; bit-stable everywhere.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % bound;
}

std::int64_t DetRng::between(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double DetRng::uniform01() {
    // 53 random bits -> [0, 1).
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double DetRng::normal(double mean, double stddev) {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + stddev * z;
}

}  // namespace llmgrid
