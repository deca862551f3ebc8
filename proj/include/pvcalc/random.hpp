#pragma once

/**
 * @file random.hpp
 * @brief Seeded randomness with output that is identical across standard
 *        libraries (std::uniform_int_distribution is implementation-defined).
 */

#include "numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace pvcalc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw generator_error("empty range for random draw");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(eng_());
        std::uint64_t limit = eng_.max() - (eng_.max() % span + 1) % span;
        std::uint64_t x;
        do x = eng_(); while (x > limit);
        return lo + static_cast<std::int64_t>(x % span);
    }
    bool coin() { return uniform(0, 1) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw generator_error("pick from an empty list");
        return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

    /// k/den with den in [1, max_den] and |k/den| <= bound.
    Rational fraction(int max_den, int bound) {
        std::int64_t den = uniform(1, max_den);
        std::int64_t k = uniform(-bound * den, bound * den);
        return Rational(k, den);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace pvcalc
