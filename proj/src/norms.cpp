#include "gaw/norms.hpp"

#include <algorithm>
#include <cmath>

#include "gaw/errors.hpp"

namespace gaw {

namespace {

// Above this log-weight magnitude plain double accumulation would leave the
// normal floating range, so the sum switches to log-sum-exp.
constexpr double kLogCrossover = 600.0;

double weight_log(const GrowthFunction& sigma, double R, int length) {
    return R * sigma.log_at(length);
}

}  // namespace

LogValue norm(const AlgebraElement& a, const NormSpec& ns) {
    if (ns.table == nullptr) throw ParseError("norm requires a length table");
    if (!(ns.p >= 1.0)) throw ParseError("norm exponent p must be >= 1");
    if (a.is_zero()) return LogValue::zero();
    const LengthTable& table = *ns.table;

    if (std::isinf(ns.p)) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [g, z] : a.coefficients()) {
            double t = std::log(std::abs(z)) + weight_log(ns.sigma, ns.R, table.word_length(g));
            best = std::max(best, t);
        }
        return LogValue::from_log(best);
    }

    std::vector<double> term_logs;
    term_logs.reserve(a.support_size());
    bool log_path = false;
    for (const auto& [g, z] : a.coefficients()) {
        double lw = weight_log(ns.sigma, ns.R, table.word_length(g));
        if (std::abs(lw) > kLogCrossover) log_path = true;
        term_logs.push_back(ns.p * std::log(std::abs(z)) + lw);
    }
    if (log_path) return LogValue::from_log(log_sum_exp(term_logs) / ns.p);
    double acc = 0.0;
    for (double t : term_logs) acc += std::exp(t);
    return LogValue::from_log(std::log(acc) / ns.p);
}

LogValue norm_l1(const AlgebraElement& a, const GrowthFunction& sigma, double R, const LengthTable& table) {
    return norm(a, NormSpec{1.0, sigma, R, &table});
}

LogValue norm_sup(const AlgebraElement& a, const GrowthFunction& sigma, double R, const LengthTable& table) {
    return norm(a, NormSpec{std::numeric_limits<double>::infinity(), sigma, R, &table});
}

LogValue tensor_norm(const ProductAlgebraElement& p, const GrowthFunction& sigma, double R,
                     const LengthTable& table) {
    if (p.coefficients().empty()) return LogValue::zero();
    std::vector<double> term_logs;
    term_logs.reserve(p.coefficients().size());
    bool log_path = false;
    for (const auto& [key, z] : p.coefficients()) {
        double lw = weight_log(sigma, R, table.word_length(key.first)) +
                    weight_log(sigma, R, table.word_length(key.second));
        if (std::abs(lw) > kLogCrossover) log_path = true;
        term_logs.push_back(std::log(std::abs(z)) + lw);
    }
    if (log_path) return LogValue::from_log(log_sum_exp(term_logs));
    double acc = 0.0;
    for (double t : term_logs) acc += std::exp(t);
    return LogValue::from_value(acc);
}

ProductContinuityReport check_product_inequality(const AlgebraElement& a, const AlgebraElement& b,
                                                 const GrowthFunction& sigma, double R,
                                                 const LengthTable& table, std::optional<double> eps,
                                                 double tol) {
    ProductContinuityReport rep;
    const std::int64_t range = 2 * static_cast<std::int64_t>(table.radius());
    if (!eps) {
        auto verdict = check_submultiplicative(sigma, range);
        if (!verdict.holds)
            throw ParseError("growth function " + sigma.to_string() +
                             " is not submultiplicative on the relevant range; pass eps");
        AlgebraElement ab = convolve(a, b);
        rep.lhs = norm_l1(ab, sigma, R, table);
        rep.rhs = norm_l1(a, sigma, R, table) * norm_l1(b, sigma, R, table);
        rep.holds = log_leq(rep.lhs, rep.rhs, tol);
        return rep;
    }
    rep.almost_mode = true;
    rep.eps = *eps;
    double c = 1.0;
    if (R > 0) c = std::pow(fit_almost_submultiplicative(sigma, *eps / R, range), R);
    rep.fitted_c = c;
    AlgebraElement ab = convolve(a, b);
    rep.lhs = norm_l1(ab, sigma, R, table);
    rep.rhs = LogValue::from_value(c) * norm_l1(a, sigma, R + *eps, table) *
              norm_l1(b, sigma, R + *eps, table);
    rep.holds = log_leq(rep.lhs, rep.rhs, tol);
    return rep;
}

BimoduleReport check_bimodule_estimate(const AlgebraElement& a, const AlgebraElement& b,
                                       const GrowthFunction& sigma, double R, const LengthTable& table,
                                       std::optional<double> eps, double tol) {
    BimoduleReport rep;
    rep.almost_mode = eps.has_value();
    const std::int64_t range = 2 * static_cast<std::int64_t>(table.radius());
    if (!rep.almost_mode) {
        auto verdict = check_submultiplicative(sigma, range);
        if (!verdict.holds)
            throw ParseError("growth function " + sigma.to_string() +
                             " is not submultiplicative on the relevant range; pass eps");
    } else {
        rep.eps = *eps;
        rep.fitted_c = R > 0 ? std::pow(fit_almost_submultiplicative(sigma, *eps / R, range), R) : 1.0;
    }

    const LogValue na = norm_l1(a, sigma, R, table);
    const LogValue nb_inf = norm_sup(b, sigma, -R, table);
    const LogValue na_eps = rep.almost_mode ? norm_l1(a, sigma, R + rep.eps, table) : na;
    AlgebraElement ab = convolve(a, b);

    // shellwise coefficient bound
    for (const auto& [h, z] : ab.coefficients()) {
        int lh = table.word_length(h);
        LogValue lhs = LogValue::from_value(std::abs(z));
        LogValue rhs;
        if (!rep.almost_mode) {
            rhs = LogValue::from_log(R * sigma.log_at(lh)) * na * nb_inf;
        } else {
            rhs = LogValue::from_value(rep.fitted_c) *
                  LogValue::from_log((R + rep.eps) * sigma.log_at(lh)) * na_eps * nb_inf;
        }
        if (!log_leq(lhs, rhs, tol)) rep.pointwise_violations++;
    }

    // sharp bound for the unit coefficient, valid in both modes
    LogValue ab_e = LogValue::from_value(std::abs(trace(ab)));
    rep.unit_coeff_holds = log_leq(ab_e, na * nb_inf, tol);

    // sup-norm module bounds hold in the submultiplicative case
    if (!rep.almost_mode) {
        AlgebraElement ba = convolve(b, a);
        rep.module_bound_left = log_leq(norm_sup(ab, sigma, -R, table), na * nb_inf, tol);
        rep.module_bound_right = log_leq(norm_sup(ba, sigma, -R, table), na * nb_inf, tol);
    }

    rep.antipode_isometric = norm_sup(antipode(b), sigma, -R, table) == nb_inf;

    rep.holds = rep.pointwise_violations == 0 && rep.unit_coeff_holds && rep.module_bound_left &&
                rep.module_bound_right && rep.antipode_isometric;
    return rep;
}

std::vector<LogValue> c0_tail_profile(const AlgebraElement& b, const GrowthFunction& sigma, double R,
                                      const LengthTable& table) {
    std::vector<LogValue> profile(static_cast<std::size_t>(table.radius()) + 1, LogValue::zero());
    for (const auto& [g, z] : b.coefficients()) {
        int n = table.word_length(g);
        LogValue v = LogValue::from_log(std::log(std::abs(z)) - R * sigma.log_at(n));
        auto& slot = profile[static_cast<std::size_t>(n)];
        if (v > slot) slot = v;
    }
    return profile;
}

C0ClosureReport check_c0_closure(const AlgebraElement& a, const AlgebraElement& b,
                                 const GrowthFunction& sigma, double R, const LengthTable& table,
                                 double eps, double tol) {
    C0ClosureReport rep;
    const GroupSpec& spec = table.spec();

    // K: where the profile of b still reaches eps
    std::vector<Element> big_b;
    for (const auto& [g, z] : b.coefficients()) {
        double prof = std::log(std::abs(z)) - R * sigma.log_at(table.word_length(g));
        if (prof >= std::log(eps)) big_b.push_back(g);
    }
    // K~: heaviest prefix of a until the remaining weighted l1 tail is < eps
    std::vector<std::pair<double, Element>> weighted;
    for (const auto& [g, z] : a.coefficients())
        weighted.emplace_back(std::log(std::abs(z)) + R * sigma.log_at(table.word_length(g)), g);
    std::sort(weighted.begin(), weighted.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    std::vector<Element> prefix_a;
    std::size_t cut = weighted.size();
    for (std::size_t take = 0; take <= weighted.size(); ++take) {
        double tail = -std::numeric_limits<double>::infinity();
        for (std::size_t i = take; i < weighted.size(); ++i) tail = log_add(tail, weighted[i].first);
        if (tail < std::log(eps)) {
            cut = take;
            break;
        }
    }
    for (std::size_t i = 0; i < cut; ++i) prefix_a.push_back(weighted[i].second);

    // K' = prefix_a * K
    std::vector<Element> excluded;
    for (const auto& x : prefix_a)
        for (const auto& k : big_b) excluded.push_back(spec.multiply(x, k));
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    rep.excluded_set_size = excluded.size();

    AlgebraElement ab = convolve(a, b);
    LogValue bound = LogValue::from_value(eps) *
                     (norm_sup(b, sigma, -R, table) + norm_l1(a, sigma, R, table));
    rep.holds = true;
    for (const auto& [h, z] : ab.coefficients()) {
        if (std::binary_search(excluded.begin(), excluded.end(), h)) continue;
        rep.checked++;
        LogValue prof = LogValue::from_log(std::log(std::abs(z)) - R * sigma.log_at(table.word_length(h)));
        if (!log_leq(prof, bound, tol)) rep.holds = false;
    }
    return rep;
}

}  // namespace gaw
