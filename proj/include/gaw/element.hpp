#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

namespace gaw {

class Element;

// Family-specific normal forms. A free-group word is a sequence of signed
// 1-based letters (+i for the i-th generator, -i for its inverse) with no
// adjacent letter/inverse pair. The Heisenberg triple (a,b,c) multiplies as
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
using Word = std::vector<std::int32_t>;
using IntVec = std::vector<std::int64_t>;
using Residue = std::int64_t;
using HeisTriple = std::array<std::int64_t, 3>;
using Tuple = std::vector<Element>;

class Element {
public:
    using Storage = std::variant<Word, IntVec, Residue, HeisTriple, Tuple>;

    Element() : storage_(Word{}) {}
    explicit Element(Storage s) : storage_(std::move(s)) {}

    static Element word(Word w) { return Element(Storage(std::move(w))); }
    static Element vec(IntVec v) { return Element(Storage(std::move(v))); }
    static Element residue(Residue r) { return Element(Storage(r)); }
    static Element heis(std::int64_t a, std::int64_t b, std::int64_t c) {
        return Element(Storage(HeisTriple{a, b, c}));
    }
    static Element tuple(Tuple t) { return Element(Storage(std::move(t))); }

    const Storage& storage() const { return storage_; }

    template <typename T>
    const T& as() const {
        return std::get<T>(storage_);
    }
    template <typename T>
    bool holds() const {
        return std::holds_alternative<T>(storage_);
    }

    friend bool operator==(const Element& a, const Element& b);
    // Lexicographic on the normal form, family-specific; used for the
    // deterministic ordering of tables and sparse supports.
    friend bool operator<(const Element& a, const Element& b);

private:
    Storage storage_;
};

std::size_t hash_value(const Element& e);

struct ElementHash {
    std::size_t operator()(const Element& e) const { return hash_value(e); }
};

}  // namespace gaw
