#include "gaw/bw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaw/errors.hpp"
#include "gaw/norms.hpp"
#include "gaw/rng.hpp"

namespace gaw {

double scaling_log(const LengthTable& table, const Element& g, double rho) {
    return rho * std::lgamma(static_cast<double>(table.length_extended(g)) + 1.0);
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Geometric extrapolation of the mass beyond the truncation ball from the
// trailing shell sums. Returns tail/value, +inf when the shells do not decay.
double shell_tail_fraction(std::span<const double> shell_logs, double value_log) {
    // drop empty trailing shells: a saturated (finite) group has no tail
    std::size_t last = shell_logs.size();
    while (last > 0 && std::isinf(shell_logs[last - 1]) && shell_logs[last - 1] < 0) --last;
    if (last < shell_logs.size()) return 0.0;
    if (last < 2) return 0.0;
    std::size_t window = std::max<std::size_t>(2, shell_logs.size() / 4);
    double r = 0.0;
    for (std::size_t i = last - std::min(window, last - 1); i < last; ++i) {
        if (std::isinf(shell_logs[i - 1])) return std::numeric_limits<double>::infinity();
        r = std::max(r, std::exp(shell_logs[i] - shell_logs[i - 1]));
    }
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    if (r == 0.0) return 0.0;
    double tail_log = shell_logs[last - 1] + std::log(r) - std::log1p(-r);
    return std::exp(tail_log - value_log);
}

}  // namespace

BWLevels compute_bw_levels(const AlgebraElement& a, double rho, int depth, std::uint64_t index,
                           int truncation_radius, const LengthTable& table, bool parallel) {
    if (!(rho > 0)) throw ParseError("rho must be > 0");
    if (depth < 0 || depth >= 63) throw ParseError("depth out of range");
    if (index >= (std::uint64_t{1} << depth)) throw ParseError("index must satisfy 0 <= l < 2^m");
    if (truncation_radius > table.radius()) throw OutOfBallError("truncation radius exceeds table");
    if (!(a.spec() == table.spec())) throw FamilyMismatchError("element and table group differ");

    BWLevels out;
    out.depth = depth;
    out.index = index;
    out.truncation_radius = truncation_radius;
    const std::size_t size = table.shell(truncation_radius).second;
    out.ball_size = size;

    std::vector<double> log_c(size);
    for (std::size_t i = 0; i < size; ++i)
        log_c[i] = rho * std::lgamma(static_cast<double>(table.length_at(i)) + 1.0);

    // level 0 lives on the support of a, which must fit inside the ball
    std::vector<double> cur(size, kNegInf);
    for (const auto& [g, z] : a.coefficients()) {
        std::size_t i = table.index_of(g);
        if (i >= size) throw OutOfBallError("support leaves the truncation ball");
        cur[i] = std::log(std::abs(z)) + log_c[i];
    }

    const int radius = truncation_radius;
    std::vector<double> tau(size, 0.0);
    std::vector<double> next(size), tau_next(size);

    for (int level = 1; level <= depth; ++level) {
        const bool invert = ((index >> (depth - level)) & 1) != 0;
        // exceptions cannot leave an OpenMP region; failures are flagged and
        // rethrown after the loop
        std::string oob_message;

#pragma omp parallel for schedule(dynamic, 16) if (parallel && size > 64)
        for (std::size_t k = 0; k < size; ++k) {
            try {
                const Element& ek = table.element(k);
                double acc = kNegInf;
                double inherited = kNegInf;  // mass carried by truncated lower levels
                std::vector<double> shells(static_cast<std::size_t>(radius) + 1, kNegInf);
                for (std::size_t i = 0; i < size; ++i) {
                    if (std::isinf(cur[i])) continue;
                    Element q = table.spec().multiply(table.element(table.inverse_index(i)), ek);
                    double lq =
                        rho * std::lgamma(static_cast<double>(table.length_extended(q)) + 1.0);
                    double term = 2.0 * cur[i] + log_c[k] - log_c[i] - lq;
                    acc = log_add(acc, term);
                    // squaring doubles the relative error of the carried value
                    if (tau[i] > 0.0) inherited = log_add(inherited, term + std::log(2.0 * tau[i]));
                    auto& shell = shells[static_cast<std::size_t>(table.length_at(i))];
                    shell = log_add(shell, term);
                }
                next[k] = acc;
                // the level-1 sum runs over the finite support only and is exact
                double trunc = level == 1 ? 0.0 : shell_tail_fraction(shells, acc);
                double carried = std::isinf(acc) || std::isinf(inherited)
                                     ? 0.0
                                     : std::exp(inherited - acc);
                tau_next[k] = carried + trunc;
            } catch (const Error& e) {
#pragma omp critical
                if (oob_message.empty()) oob_message = e.what();
            }
        }
        if (!oob_message.empty())
            throw OutOfBallError(oob_message + " (table radius must cover products of the "
                                               "truncation ball with itself)");

        if (invert) {
            std::vector<double> ph(size), pt(size);
            for (std::size_t k = 0; k < size; ++k) {
                ph[k] = next[table.inverse_index(k)];
                pt[k] = tau_next[table.inverse_index(k)];
            }
            next.swap(ph);
            tau_next.swap(pt);
        }
        cur = next;
        tau = tau_next;
    }

    out.log_h = std::move(cur);
    out.tail_fractions = std::move(tau);
    out.tail_fraction = 0.0;
    for (double t : out.tail_fractions) out.tail_fraction = std::max(out.tail_fraction, t);
    return out;
}

BWValue h_value(const AlgebraElement& a, const BWConfig& cfg, const LengthTable& table) {
    if (cfg.depth > cfg.depth_cap) throw ParseError("depth exceeds the configured cap");
    auto levels =
        compute_bw_levels(a, cfg.rho, cfg.depth, cfg.index, cfg.truncation_radius, table, true);
    std::size_t k = table.index_of(cfg.base_point);
    if (k >= levels.ball_size) throw OutOfBallError("base point outside the truncation ball");
    BWValue v;
    v.value = LogValue::from_log(levels.log_h[k]);
    v.tail_fraction = levels.tail_fractions[k];
    if (!v.value.is_zero() && v.tail_fraction > cfg.tail_fraction_limit)
        throw TailNotNegligibleError("tail fraction " + std::to_string(v.tail_fraction) +
                                     " exceeds limit; enlarge the truncation radius");
    return v;
}

BWValue bw_seminorm(const AlgebraElement& a, const BWConfig& cfg, const LengthTable& table) {
    BWValue h = h_value(a, cfg, table);
    BWValue out;
    out.value = h.value.pow(1.0 / static_cast<double>(std::uint64_t{1} << cfg.depth));
    out.tail_fraction = h.tail_fraction / static_cast<double>(std::uint64_t{1} << cfg.depth);
    return out;
}

ComparisonReport verify_comparison(double rho, int m, double eps, double R, const LengthTable& table,
                                   const ComparisonParams& params) {
    if (!(rho > 0)) throw ParseError("rho must be > 0");
    if (m < 1) throw ParseError("comparison constants need depth m >= 1");
    if (!(R < rho)) throw ParseError("norm exponent R must satisfy R < rho");
    double eps_cap = rho / std::pow(4.0, m);
    if (!(eps > 0 && eps < eps_cap))
        throw ParseError("eps must lie in (0, 4^-m rho) = (0, " + std::to_string(eps_cap) + ")");

    ComparisonReport rep;
    GrowthFunction fact = GrowthFunction::factorial();
    const double pow2m = static_cast<double>(std::uint64_t{1} << m);

    // deterministic extremes first: basis directions and the two elements
    // aligned with the weights on either side of the estimates
    auto spec_ptr = std::make_shared<GroupSpec>(table.spec());
    std::vector<AlgebraElement> pool;
    AlgebraElement aligned_up(spec_ptr), aligned_down(spec_ptr);
    for (std::size_t i = 0; i < table.shell(params.support_radius).second; ++i) {
        double lg = std::lgamma(static_cast<double>(table.length_at(i)) + 1.0);
        aligned_up.add_term(table.element(i), Coeff(std::exp(R * lg), 0.0));
        aligned_down.add_term(table.element(i), Coeff(std::exp(-(rho - eps) * lg), 0.0));
        pool.push_back(AlgebraElement::basis(spec_ptr, table.element(i)));
    }
    pool.push_back(aligned_up);
    pool.push_back(aligned_down);
    const std::size_t deterministic = pool.size();
    Rng rng(params.seed);
    for (int s = 0; s < 2 * params.sample_count; ++s)
        pool.push_back(random_sparse_element(table, rng, params.support_size, params.support_radius));
    const std::size_t half = deterministic + static_cast<std::size_t>(params.sample_count);

    double c_norm_half = 0.0, c_norm_full = 0.0;
    double c_h_half = 0.0, c_h_full = 0.0;

    for (std::size_t s = 0; s < pool.size(); ++s) {
        const AlgebraElement& a = pool[s];

        // (i): coefficient bound through level m+1 at the identity
        auto lev_i =
            compute_bw_levels(a, rho, m + 1, 0, params.truncation_radius, table, true);
        double log_norm_m1 =
            lev_i.log_h[table.index_of(table.spec().identity())] / (2.0 * pow2m);
        for (const auto& [g, z] : a.coefficients()) {
            double lhs = std::log(std::abs(z));
            double rhs = rho * (1.0 / pow2m - 1.0) *
                             std::lgamma(static_cast<double>(table.length_extended(g)) + 1.0) +
                         log_norm_m1;
            rep.pointwise_checked++;
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            if (lhs > rhs + params.tol * scale) rep.pointwise_violations++;
        }

        // (ii): weighted l1 norm against the level-m seminorm at e
        auto lev = compute_bw_levels(a, rho, m, 0, params.truncation_radius, table, true);
        double log_seminorm = lev.log_h[table.index_of(table.spec().identity())] / pow2m;
        double log_l1 = norm_l1(a, fact, R, table).log();
        double c2 = std::exp(log_l1 - log_seminorm);
        c_norm_full = std::max(c_norm_full, c2);
        if (s < half) c_norm_half = std::max(c_norm_half, c2);

        // (iii): h values against the factorial norm below rho
        double log_norm_rho_eps = norm_l1(a, fact, rho - eps, table).log();
        double c3 = 0.0;
        for (std::size_t k = 0; k < lev.ball_size; ++k) {
            if (std::isinf(lev.log_h[k])) continue;
            double bound = std::pow(4.0, m) * eps *
                               std::lgamma(static_cast<double>(table.length_at(k)) + 1.0) +
                           pow2m * log_norm_rho_eps;
            c3 = std::max(c3, std::exp(lev.log_h[k] - bound));
        }
        c_h_full = std::max(c_h_full, c3);
        if (s < half) c_h_half = std::max(c_h_half, c3);
    }

    rep.norm_constant = c_norm_half;
    rep.norm_constant_doubled = c_norm_full;
    rep.norm_constant_stable =
        c_norm_full <= c_norm_half * (1.0 + params.stability_threshold);
    rep.h_constant = c_h_half;
    rep.h_constant_doubled = c_h_full;
    rep.h_constant_stable = c_h_full <= c_h_half * (1.0 + params.stability_threshold);
    rep.holds = rep.pointwise_violations == 0 && rep.norm_constant_stable && rep.h_constant_stable;
    return rep;
}

}  // namespace gaw
