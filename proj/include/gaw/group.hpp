#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaw/element.hpp"

namespace gaw {

class GroupSpec;

struct FreeGroup {
    int rank;  // k >= 1
};
struct FreeAbelian {
    int rank;  // d >= 1
};
struct CyclicGroup {
    std::int64_t order;  // m >= 2
};
struct HeisenbergGroup {};
struct DirectProduct {
    std::vector<GroupSpec> factors;
};

// A catalog group together with an inverse-closed generator set. The catalog
// is closed (five families plus products); the word problem is solved by
// canonical normal forms, so element equality is normal-form equality.
class GroupSpec {
public:
    using Family = std::variant<FreeGroup, FreeAbelian, CyclicGroup, HeisenbergGroup, DirectProduct>;

    static GroupSpec free_group(int rank);
    static GroupSpec free_abelian(int rank);
    static GroupSpec cyclic(std::int64_t order);
    static GroupSpec heisenberg();
    static GroupSpec direct_product(std::vector<GroupSpec> factors);

    // Replaces the default generator set. The list is closed under inversion
    // automatically; the identity is rejected.
    GroupSpec with_generators(std::vector<Element> gens) const;

    const Family& family() const { return family_; }
    const std::vector<Element>& generators() const { return generators_; }
    bool has_default_generators() const { return default_generators_; }

    Element identity() const;
    bool is_identity(const Element& g) const;
    bool conforms(const Element& g) const;
    void require_conforms(const Element& g) const;  // throws FamilyMismatchError

    Element multiply(const Element& g, const Element& h) const;
    Element inverse(const Element& g) const;
    Element power(const Element& g, std::int64_t n) const;

    // Exact word length for families whose default generator sets admit a
    // closed form (free, free-abelian, cyclic, and products of those).
    // Empty for Heisenberg and for custom generator sets.
    std::optional<std::int64_t> closed_form_length(const Element& g) const;

    // Canonical positive generators, one per defining letter of the family
    // (used by morphisms; the full generator set also contains inverses).
    std::vector<Element> positive_generators() const;

    std::string canonical_string() const;  // includes the generator list
    std::string family_string() const;

    std::string element_to_string(const Element& g) const;
    Element parse_element(const std::string& text) const;

    bool operator==(const GroupSpec& o) const;

private:
    GroupSpec(Family f, std::vector<Element> gens, bool defaults)
        : family_(std::move(f)), generators_(std::move(gens)), default_generators_(defaults) {}

    static std::vector<Element> default_generators(const Family& f);

    Family family_;
    std::vector<Element> generators_;
    bool default_generators_;
};

}  // namespace gaw
