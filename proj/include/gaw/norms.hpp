#pragma once

#include <optional>
#include <vector>

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"
#include "gaw/growth.hpp"
#include "gaw/logvalue.hpp"

namespace gaw {

// Weighted norm family over a tabulated ball: for finite p the value is
// (sum_g |a_g|^p sigma(L(g))^R)^(1/p), for p = infinity it is
// sup_g |a_g| sigma(L(g))^R. R may be negative (the dual sup norms).
struct NormSpec {
    double p = 1.0;
    GrowthFunction sigma;
    double R = 0.0;
    const LengthTable* table = nullptr;
};

LogValue norm(const AlgebraElement& a, const NormSpec& ns);

LogValue norm_l1(const AlgebraElement& a, const GrowthFunction& sigma, double R, const LengthTable& table);
LogValue norm_sup(const AlgebraElement& a, const GrowthFunction& sigma, double R, const LengthTable& table);

// Tensor norm on G x G built from the product-length chart L(g) + L(h),
// i.e. weight sigma(L(g))^R sigma(L(h))^R per coefficient.
LogValue tensor_norm(const ProductAlgebraElement& p, const GrowthFunction& sigma, double R,
                     const LengthTable& table);

struct ProductContinuityReport {
    bool holds = false;
    bool almost_mode = false;
    double eps = 0.0;
    double fitted_c = 1.0;
    LogValue lhs;  // ||ab||
    LogValue rhs;  // ||a|| ||b|| resp. c ||a||_{R+eps} ||b||_{R+eps}
};

// Submultiplicative mode (eps empty): ||ab||_R <= ||a||_R ||b||_R.
// Almost-submultiplicative mode: ||ab||_R <= c ||a||_{R+eps} ||b||_{R+eps}
// with c fitted from the growth function on the relevant range.
ProductContinuityReport check_product_inequality(const AlgebraElement& a, const AlgebraElement& b,
                                                 const GrowthFunction& sigma, double R,
                                                 const LengthTable& table,
                                                 std::optional<double> eps = std::nullopt,
                                                 double tol = 1e-9);

struct BimoduleReport {
    bool holds = false;            // conjunction of everything below
    int pointwise_violations = 0;  // |(ab)_h| against the shellwise bound
    bool unit_coeff_holds = false;         // |(ab)_e| <= ||a||_R ||b||_{inf,-R}
    bool module_bound_left = true;         // ||ab||_{inf,-R} <= ||a||_R ||b||_{inf,-R}
    bool module_bound_right = true;        // same for ba
    bool antipode_isometric = false;       // ||S(b)||_{inf,-R} = ||b||_{inf,-R}
    bool almost_mode = false;
    double eps = 0.0;
    double fitted_c = 1.0;
};

BimoduleReport check_bimodule_estimate(const AlgebraElement& a, const AlgebraElement& b,
                                       const GrowthFunction& sigma, double R, const LengthTable& table,
                                       std::optional<double> eps = std::nullopt, double tol = 1e-9);

// Per-shell suprema of |b_g| / sigma(L(g))^R for n = 0..radius; decay of this
// profile is the finite stand-in for vanishing at infinity.
std::vector<LogValue> c0_tail_profile(const AlgebraElement& b, const GrowthFunction& sigma, double R,
                                      const LengthTable& table);

struct C0ClosureReport {
    bool holds = false;
    std::size_t excluded_set_size = 0;  // |K'|
    std::size_t checked = 0;            // product support outside K'
};

// Sub-bimodule closure at tolerance eps: outside the finite set K' built
// from the tails of a and b, the profile of ab stays below
// eps (||b||_{inf,-R} + ||a||_R).
C0ClosureReport check_c0_closure(const AlgebraElement& a, const AlgebraElement& b,
                                 const GrowthFunction& sigma, double R, const LengthTable& table,
                                 double eps, double tol = 1e-9);

}  // namespace gaw
