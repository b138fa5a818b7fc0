#pragma once

#include <cstdint>
#include <random>

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"

namespace gaw {

// Seeded generator with self-contained distributions, so the same seed gives
// the same stream on every platform (the standard pins mt19937_64 but not
// the distribution adaptors).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double uniform() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

private:
    std::mt19937_64 eng_;
};

// Sparse element with the requested support size drawn from the ball of the
// given radius; coefficients have real and imaginary parts in [-1, 1] and at
// least one term keeps magnitude >= 0.1 so the element is never zero.
AlgebraElement random_sparse_element(const LengthTable& table, Rng& rng, int support_size,
                                     int max_radius);

}  // namespace gaw
