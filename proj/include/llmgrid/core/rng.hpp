#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace llmgrid {

/// Deterministic RNG helpers. std::shuffle and the distribution classes are
/// implementation-defined across standard libraries, so seeded sampling that
/// must reproduce bit-identically goes through these instead.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    double uniform01();

    /// Normal(mean, stddev) via Box-Muller (deterministic across platforms).
    double normal(double mean, double stddev);

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace llmgrid
