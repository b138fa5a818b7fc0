#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaw {

// A catalog growth function sigma: N0 -> [1, inf), monotonically increasing
// and unbounded, evaluated in natural-log space throughout. Sampled variants
// wrap tabulated sequences (e.g. the surface or volume growth of a group) so
// the comparison machinery applies to them on their finite range.
class GrowthFunction {
public:
    static GrowthFunction polynomial(std::vector<double> ascending_coeffs);
    static GrowthFunction sub_exponential(double theta);  // exp(n^theta), 0 < theta <= 1
    static GrowthFunction factorial();                    // n!
    static GrowthFunction sub_factorial(double theta);    // (n^theta)! via lgamma
    static GrowthFunction power(GrowthFunction base, double d);
    static GrowthFunction product(GrowthFunction a, GrowthFunction b);
    static GrowthFunction scaled_sum(double x, GrowthFunction a, double y, GrowthFunction b);
    static GrowthFunction sampled(std::vector<double> log_values, std::string label);

    // log sigma(n); throws OutOfBallError past the range of a sampled variant.
    double log_at(std::int64_t n) const;

    // Largest admissible argument; empty when unbounded (analytic variants).
    std::optional<std::int64_t> max_arg() const;

    // Total order of catalog growth classes: all polynomials coincide, then
    // exp(n^theta) and (n^theta)! interleave by theta. Empty for sampled.
    struct SymbolicClass {
        double theta;  // 0 for the polynomial class
        int tier;      // 0 = polynomial, 1 = exp(n^theta), 2 = (n^theta)!
        friend auto operator<=>(const SymbolicClass&, const SymbolicClass&) = default;
    };
    std::optional<SymbolicClass> symbolic_class() const;

    std::string to_string() const;

    // Number of times the sub-factorial monotonicity clamp fired.
    static long subfactorial_clamp_count();

    struct Node;  // implementation detail, opaque outside growth.cpp

private:
    explicit GrowthFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

enum class CompareResult { Precedes, Succeeds, Equivalent, Unknown };

// Rule-based comparison in the "sigma(n) <= c sigma'(cn)^k" preorder.
CompareResult symbolic_compare(const GrowthFunction& a, const GrowthFunction& b);

struct SubmultVerdict {
    bool holds = true;
    std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;  // first (n, m) violating
};

// Exhaustive check of sigma(n+m) <= sigma(n) sigma(m) for all n+m <= N.
SubmultVerdict check_submultiplicative(const GrowthFunction& sigma, std::int64_t N,
                                       double log_tol = 1e-12);

// Smallest c >= 1 with sigma(n+m) <= c sigma(n)^(1+eps) sigma(m)^(1+eps) on
// the range n+m <= N.
double fit_almost_submultiplicative(const GrowthFunction& sigma, double eps, std::int64_t N);

struct GrowthWitness {
    std::int64_t c = 1;
    std::int64_t k = 1;
    std::int64_t checked_range = 0;
};

// sigma(n) <= c sigma'(cn)^k for all n in [0, N], shrunk to the sampled
// domain where necessary.
bool check_precedes(const GrowthFunction& sigma, const GrowthFunction& sigma_prime, std::int64_t c,
                    std::int64_t k, std::int64_t N, double log_tol = 1e-12);

// Scans the integer grid [1, c_max] x [1, k_max] and returns the
// lexicographically least passing pair. Absence only means "not found up to
// the caps", never a disproof.
std::optional<GrowthWitness> search_witness(const GrowthFunction& sigma,
                                            const GrowthFunction& sigma_prime, std::int64_t c_max,
                                            std::int64_t k_max, std::int64_t N);

// Config-string syntax: poly(1,1), subexp(0.5), factorial, subfact(0.5),
// pow(f,d), prod(f,g), sum(x,f,y,g).
GrowthFunction parse_growth(const std::string& text);

}  // namespace gaw
