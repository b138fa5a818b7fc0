#pragma once

#include <complex>
#include <map>
#include <memory>
#include <utility>

#include "gaw/element.hpp"
#include "gaw/group.hpp"

namespace gaw {

using Coeff = std::complex<double>;

// Finitely supported complex coefficient table over group elements. Zero
// coefficients are never stored (exact-zero pruning only); the support is
// kept in the deterministic normal-form order.
class AlgebraElement {
public:
    using CoeffMap = std::map<Element, Coeff>;

    explicit AlgebraElement(std::shared_ptr<const GroupSpec> spec) : spec_(std::move(spec)) {}
    explicit AlgebraElement(const GroupSpec& spec) : spec_(std::make_shared<GroupSpec>(spec)) {}

    static AlgebraElement basis(std::shared_ptr<const GroupSpec> spec, const Element& g);
    static AlgebraElement unit(std::shared_ptr<const GroupSpec> spec);  // e_e

    const GroupSpec& spec() const { return *spec_; }
    std::shared_ptr<const GroupSpec> spec_ptr() const { return spec_; }

    const CoeffMap& coefficients() const { return coeff_; }
    std::size_t support_size() const { return coeff_.size(); }
    bool is_zero() const { return coeff_.empty(); }

    Coeff at(const Element& g) const;  // 0 when g is not in the support
    void add_term(const Element& g, Coeff z);
    void set_term(const Element& g, Coeff z);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(Coeff z) const;

    bool operator==(const AlgebraElement& o) const;

private:
    std::shared_ptr<const GroupSpec> spec_;
    CoeffMap coeff_;
};

// Sparse element of the algebra over G x G (the coproduct's codomain).
class ProductAlgebraElement {
public:
    using Key = std::pair<Element, Element>;
    using CoeffMap = std::map<Key, Coeff>;

    explicit ProductAlgebraElement(std::shared_ptr<const GroupSpec> spec) : spec_(std::move(spec)) {}

    const GroupSpec& spec() const { return *spec_; }
    const CoeffMap& coefficients() const { return coeff_; }
    void add_term(const Element& g, const Element& h, Coeff z);
    Coeff at(const Element& g, const Element& h) const;

    bool operator==(const ProductAlgebraElement& o) const { return coeff_ == o.coeff_; }

private:
    std::shared_ptr<const GroupSpec> spec_;
    CoeffMap coeff_;
};

// (ab)_h = sum_g a_g b_{g^-1 h}. Work is split over fixed-size chunks of the
// left support; the chunks may run on several threads but are merged in chunk
// order, so the result never depends on the thread count.
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

// Textbook double loop, kept as the reference for the tests and benchmark.
AlgebraElement convolve_serial(const AlgebraElement& a, const AlgebraElement& b);

// Hopf structure maps.
AlgebraElement star(const AlgebraElement& a);      // sum conj(a_g) e_{g^-1}
AlgebraElement antipode(const AlgebraElement& a);  // sum a_g e_{g^-1}
Coeff counit(const AlgebraElement& a);             // sum a_g
Coeff trace(const AlgebraElement& a);              // a_e
ProductAlgebraElement coproduct(const AlgebraElement& a);  // sum a_g e_g (x) e_g

// epsilon applied to the left tensor leg; recovers a from coproduct(a).
AlgebraElement counit_left(const ProductAlgebraElement& p);

// <phi, a> = sum_g a_g phi_g.
Coeff dual_pairing(const AlgebraElement& phi, const AlgebraElement& a);

// x is group-like when coproduct(x) = x (x) x and counit(x) = 1.
bool is_grouplike(const AlgebraElement& x);

}  // namespace gaw
