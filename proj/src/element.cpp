#include "gaw/element.hpp"

namespace gaw {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
    // 64-bit splitmix-style combine
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

}  // namespace

bool operator==(const Element& a, const Element& b) {
    return a.storage_ == b.storage_;
}

bool operator<(const Element& a, const Element& b) {
    const auto& sa = a.storage_;
    const auto& sb = b.storage_;
    if (sa.index() != sb.index()) return sa.index() < sb.index();
    switch (sa.index()) {
        case 0:
            return std::get<Word>(sa) < std::get<Word>(sb);
        case 1:
            return std::get<IntVec>(sa) < std::get<IntVec>(sb);
        case 2:
            return std::get<Residue>(sa) < std::get<Residue>(sb);
        case 3:
            return std::get<HeisTriple>(sa) < std::get<HeisTriple>(sb);
        default: {
            const auto& ta = std::get<Tuple>(sa);
            const auto& tb = std::get<Tuple>(sb);
            return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                                [](const Element& x, const Element& y) { return x < y; });
        }
    }
}

std::size_t hash_value(const Element& e) {
    std::size_t h = 1469598103934665603ULL;
    h = mix(h, e.storage().index());
    switch (e.storage().index()) {
        case 0:
            for (auto l : e.as<Word>()) h = mix(h, static_cast<std::size_t>(static_cast<std::int64_t>(l)));
            break;
        case 1:
            for (auto x : e.as<IntVec>()) h = mix(h, static_cast<std::size_t>(x));
            break;
        case 2:
            h = mix(h, static_cast<std::size_t>(e.as<Residue>()));
            break;
        case 3:
            for (auto x : e.as<HeisTriple>()) h = mix(h, static_cast<std::size_t>(x));
            break;
        default:
            for (const auto& f : e.as<Tuple>()) h = mix(h, hash_value(f));
            break;
    }
    return h;
}

}  // namespace gaw
