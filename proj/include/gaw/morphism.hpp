#pragma once

#include <memory>
#include <vector>

#include "gaw/algebra.hpp"
#include "gaw/element.hpp"
#include "gaw/group.hpp"

namespace gaw {

// A group morphism given by images of the source's positive generators.
// Construction validates the images against the defining relations of the
// source family (free: none; free abelian: commuting images; cyclic(m):
// image^m = e; Heisenberg: [X,Y] commutes with X and Y; direct products add
// cross-factor commutation) and throws RelationViolationError otherwise.
class GroupMorphism {
public:
    GroupMorphism(std::shared_ptr<const GroupSpec> source, std::shared_ptr<const GroupSpec> target,
                  std::vector<Element> generator_images);

    static GroupMorphism identity(std::shared_ptr<const GroupSpec> spec);

    const GroupSpec& source() const { return *source_; }
    const GroupSpec& target() const { return *target_; }
    std::shared_ptr<const GroupSpec> target_ptr() const { return target_; }
    const std::vector<Element>& generator_images() const { return images_; }

    Element apply(const Element& g) const;

private:
    void validate() const;

    std::shared_ptr<const GroupSpec> source_;
    std::shared_ptr<const GroupSpec> target_;
    std::vector<Element> images_;  // aligned with source_->positive_generators()
};

// Linear extension phi(sum a_g e_g) = sum a_g e_{phi(g)}; coefficients with a
// common image accumulate.
AlgebraElement push_forward(const GroupMorphism& phi, const AlgebraElement& a);

}  // namespace gaw
