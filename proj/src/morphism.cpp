#include "gaw/morphism.hpp"

#include <span>

#include "gaw/errors.hpp"

namespace gaw {

GroupMorphism::GroupMorphism(std::shared_ptr<const GroupSpec> source,
                             std::shared_ptr<const GroupSpec> target,
                             std::vector<Element> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
    auto gens = source_->positive_generators();
    if (images_.size() != gens.size())
        throw ParseError("expected " + std::to_string(gens.size()) + " generator images, got " +
                         std::to_string(images_.size()));
    for (const auto& im : images_) target_->require_conforms(im);
    validate();
}

GroupMorphism GroupMorphism::identity(std::shared_ptr<const GroupSpec> spec) {
    auto gens = spec->positive_generators();
    return GroupMorphism(spec, spec, std::move(gens));
}

namespace {

void require_commute(const GroupSpec& t, const Element& x, const Element& y, const std::string& what) {
    if (!(t.multiply(x, y) == t.multiply(y, x)))
        throw RelationViolationError("images violate " + what + ": [" + t.element_to_string(x) + ", " +
                                     t.element_to_string(y) + "] != e");
}

void validate_family(const GroupSpec& src, const GroupSpec& tgt, std::span<const Element> images) {
    if (std::holds_alternative<FreeGroup>(src.family())) return;
    if (std::holds_alternative<FreeAbelian>(src.family())) {
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = i + 1; j < images.size(); ++j)
                require_commute(tgt, images[i], images[j], "commutation x_i x_j = x_j x_i");
        return;
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&src.family())) {
        Element p = tgt.power(images[0], cy->order);
        if (!tgt.is_identity(p))
            throw RelationViolationError("image violates x^" + std::to_string(cy->order) +
                                         " = e: got " + tgt.element_to_string(p));
        return;
    }
    if (std::holds_alternative<HeisenbergGroup>(src.family())) {
        const Element& x = images[0];
        const Element& y = images[1];
        Element z = tgt.multiply(tgt.multiply(x, y), tgt.multiply(tgt.inverse(x), tgt.inverse(y)));
        require_commute(tgt, z, x, "centrality of [x, y] against x");
        require_commute(tgt, z, y, "centrality of [x, y] against y");
        return;
    }
    const auto& dp = std::get<DirectProduct>(src.family());
    std::size_t offset = 0;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (const auto& f : dp.factors) {
        std::size_t len = f.positive_generators().size();
        blocks.emplace_back(offset, offset + len);
        validate_family(f, tgt, images.subspan(offset, len));
        offset += len;
    }
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj)
            for (std::size_t i = blocks[bi].first; i < blocks[bi].second; ++i)
                for (std::size_t j = blocks[bj].first; j < blocks[bj].second; ++j)
                    require_commute(tgt, images[i], images[j], "cross-factor commutation");
}

}  // namespace

void GroupMorphism::validate() const { validate_family(*source_, *target_, images_); }

Element GroupMorphism::apply(const Element& g) const {
    source_->require_conforms(g);
    const GroupSpec& tgt = *target_;
    if (std::holds_alternative<FreeGroup>(source_->family())) {
        Element out = tgt.identity();
        for (auto l : g.as<Word>()) {
            const Element& im = images_[static_cast<std::size_t>(std::abs(l)) - 1];
            out = tgt.multiply(out, l > 0 ? im : tgt.inverse(im));
        }
        return out;
    }
    if (std::holds_alternative<FreeAbelian>(source_->family())) {
        const auto& v = g.as<IntVec>();
        Element out = tgt.identity();
        for (std::size_t i = 0; i < v.size(); ++i) out = tgt.multiply(out, tgt.power(images_[i], v[i]));
        return out;
    }
    if (std::holds_alternative<CyclicGroup>(source_->family()))
        return tgt.power(images_[0], g.as<Residue>());
    if (std::holds_alternative<HeisenbergGroup>(source_->family())) {
        // (a, b, c) = x^a y^b z^(c - ab) with z = [x, y]
        const auto& t = g.as<HeisTriple>();
        const Element& x = images_[0];
        const Element& y = images_[1];
        Element z = tgt.multiply(tgt.multiply(x, y), tgt.multiply(tgt.inverse(x), tgt.inverse(y)));
        Element out = tgt.multiply(tgt.power(x, t[0]), tgt.power(y, t[1]));
        return tgt.multiply(out, tgt.power(z, t[2] - t[0] * t[1]));
    }
    const auto& dp = std::get<DirectProduct>(source_->family());
    const auto& tup = g.as<Tuple>();
    Element out = tgt.identity();
    std::size_t offset = 0;
    for (std::size_t i = 0; i < dp.factors.size(); ++i) {
        std::size_t len = dp.factors[i].positive_generators().size();
        std::vector<Element> sub(images_.begin() + offset, images_.begin() + offset + len);
        GroupMorphism factor_map(std::make_shared<GroupSpec>(dp.factors[i]), target_, std::move(sub));
        out = tgt.multiply(out, factor_map.apply(tup[i]));
        offset += len;
    }
    return out;
}

AlgebraElement push_forward(const GroupMorphism& phi, const AlgebraElement& a) {
    if (!(a.spec() == phi.source()))
        throw FamilyMismatchError("element lives over " + a.spec().family_string() +
                                  ", morphism expects " + phi.source().family_string());
    AlgebraElement out(phi.target_ptr());
    for (const auto& [g, z] : a.coefficients()) out.add_term(phi.apply(g), z);
    return out;
}

}  // namespace gaw
