#pragma once

#include <utility>
#include <vector>

#include "gaw/ball.hpp"

namespace gaw {

// Internal access point for constructing LengthTable instances; shared by the
// BFS enumeration and the cache reader.
class BallBuilder {
public:
    static LengthTable build(const GroupSpec& spec, int radius, std::size_t max_elements,
                             bool parallel);
    static LengthTable from_rows(const GroupSpec& spec, int radius,
                                 std::vector<std::pair<Element, int>> rows);
};

}  // namespace gaw
