#include "gaw/rng.hpp"

#include <algorithm>

#include "gaw/errors.hpp"

namespace gaw {

AlgebraElement random_sparse_element(const LengthTable& table, Rng& rng, int support_size,
                                     int max_radius) {
    if (max_radius > table.radius()) throw OutOfBallError("support radius exceeds table radius");
    std::size_t limit = table.shell(max_radius).second;
    AlgebraElement a(std::make_shared<GroupSpec>(table.spec()));
    for (int t = 0; t < support_size; ++t) {
        std::size_t idx = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(limit) - 1));
        double re = rng.uniform(-1.0, 1.0);
        double im = rng.uniform(-1.0, 1.0);
        if (t == 0) {
            // keep the element away from zero
            if (std::abs(re) < 0.1) re = re < 0 ? -0.5 : 0.5;
        }
        a.set_term(table.element(idx), Coeff(re, im));
    }
    return a;
}

}  // namespace gaw
