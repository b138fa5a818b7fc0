#include "gaw/algebra.hpp"

#include <vector>

#include "gaw/errors.hpp"

namespace gaw {

namespace {

void require_same_spec(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.spec() == b.spec()))
        throw FamilyMismatchError("operands live over different groups: " + a.spec().family_string() +
                                  " vs " + b.spec().family_string());
}

}  // namespace

AlgebraElement AlgebraElement::basis(std::shared_ptr<const GroupSpec> spec, const Element& g) {
    spec->require_conforms(g);
    AlgebraElement a(std::move(spec));
    a.coeff_.emplace(g, Coeff(1.0, 0.0));
    return a;
}

AlgebraElement AlgebraElement::unit(std::shared_ptr<const GroupSpec> spec) {
    Element e = spec->identity();
    return basis(std::move(spec), e);
}

Coeff AlgebraElement::at(const Element& g) const {
    auto it = coeff_.find(g);
    return it == coeff_.end() ? Coeff(0.0, 0.0) : it->second;
}

void AlgebraElement::add_term(const Element& g, Coeff z) {
    spec_->require_conforms(g);
    auto [it, inserted] = coeff_.try_emplace(g, z);
    if (!inserted) it->second += z;
    if (it->second == Coeff(0.0, 0.0)) coeff_.erase(it);
}

void AlgebraElement::set_term(const Element& g, Coeff z) {
    spec_->require_conforms(g);
    if (z == Coeff(0.0, 0.0))
        coeff_.erase(g);
    else
        coeff_[g] = z;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_spec(*this, o);
    AlgebraElement out = *this;
    for (const auto& [g, z] : o.coeff_) out.add_term(g, z);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same_spec(*this, o);
    AlgebraElement out = *this;
    for (const auto& [g, z] : o.coeff_) out.add_term(g, -z);
    return out;
}

AlgebraElement AlgebraElement::scaled(Coeff z) const {
    AlgebraElement out(spec_);
    if (z == Coeff(0.0, 0.0)) return out;
    for (const auto& [g, c] : coeff_) out.coeff_.emplace(g, c * z);
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return spec() == o.spec() && coeff_ == o.coeff_;
}

void ProductAlgebraElement::add_term(const Element& g, const Element& h, Coeff z) {
    auto key = Key(g, h);
    auto [it, inserted] = coeff_.try_emplace(key, z);
    if (!inserted) it->second += z;
    if (it->second == Coeff(0.0, 0.0)) coeff_.erase(it);
}

Coeff ProductAlgebraElement::at(const Element& g, const Element& h) const {
    auto it = coeff_.find(Key(g, h));
    return it == coeff_.end() ? Coeff(0.0, 0.0) : it->second;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_spec(a, b);
    const GroupSpec& spec = a.spec();

    std::vector<const std::pair<const Element, Coeff>*> aterms;
    aterms.reserve(a.support_size());
    for (const auto& t : a.coefficients()) aterms.push_back(&t);

    constexpr std::size_t kChunk = 256;
    const std::size_t nchunks = (aterms.size() + kChunk - 1) / kChunk;
    std::vector<AlgebraElement::CoeffMap> partial(nchunks);

#pragma omp parallel for schedule(dynamic) if (nchunks > 1 && b.support_size() * kChunk > 8192)
    for (std::size_t c = 0; c < nchunks; ++c) {
        auto& out = partial[c];
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min((c + 1) * kChunk, aterms.size());
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& [g, ag] = *aterms[i];
            for (const auto& [h, bh] : b.coefficients()) {
                Element gh = spec.multiply(g, h);
                auto [it, inserted] = out.try_emplace(std::move(gh), ag * bh);
                if (!inserted) it->second += ag * bh;
            }
        }
    }

    AlgebraElement result(a.spec_ptr());
    AlgebraElement::CoeffMap merged;
    for (auto& part : partial) {
        for (auto& [g, z] : part) {
            auto [it, inserted] = merged.try_emplace(g, z);
            if (!inserted) it->second += z;
        }
    }
    for (auto& [g, z] : merged)
        if (z != Coeff(0.0, 0.0)) result.set_term(g, z);
    return result;
}

AlgebraElement convolve_serial(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_spec(a, b);
    const GroupSpec& spec = a.spec();
    AlgebraElement result(a.spec_ptr());
    for (const auto& [g, ag] : a.coefficients())
        for (const auto& [h, bh] : b.coefficients()) result.add_term(spec.multiply(g, h), ag * bh);
    return result;
}

AlgebraElement star(const AlgebraElement& a) {
    AlgebraElement out(a.spec_ptr());
    for (const auto& [g, z] : a.coefficients()) out.add_term(a.spec().inverse(g), std::conj(z));
    return out;
}

AlgebraElement antipode(const AlgebraElement& a) {
    AlgebraElement out(a.spec_ptr());
    for (const auto& [g, z] : a.coefficients()) out.add_term(a.spec().inverse(g), z);
    return out;
}

Coeff counit(const AlgebraElement& a) {
    Coeff s(0.0, 0.0);
    for (const auto& [g, z] : a.coefficients()) s += z;
    return s;
}

Coeff trace(const AlgebraElement& a) { return a.at(a.spec().identity()); }

ProductAlgebraElement coproduct(const AlgebraElement& a) {
    ProductAlgebraElement out(a.spec_ptr());
    for (const auto& [g, z] : a.coefficients()) out.add_term(g, g, z);
    return out;
}

AlgebraElement counit_left(const ProductAlgebraElement& p) {
    AlgebraElement out(std::make_shared<GroupSpec>(p.spec()));
    for (const auto& [key, z] : p.coefficients()) out.add_term(key.second, z);
    return out;
}

Coeff dual_pairing(const AlgebraElement& phi, const AlgebraElement& a) {
    require_same_spec(phi, a);
    Coeff s(0.0, 0.0);
    for (const auto& [g, ag] : a.coefficients()) s += ag * phi.at(g);
    return s;
}

bool is_grouplike(const AlgebraElement& x) {
    if (x.support_size() != 1) return false;
    if (counit(x) != Coeff(1.0, 0.0)) return false;
    ProductAlgebraElement lhs = coproduct(x);
    ProductAlgebraElement rhs(x.spec_ptr());
    for (const auto& [g, zg] : x.coefficients())
        for (const auto& [h, zh] : x.coefficients()) rhs.add_term(g, h, zg * zh);
    return lhs == rhs;
}

}  // namespace gaw
