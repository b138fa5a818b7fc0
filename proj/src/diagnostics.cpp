#include "gaw/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "gaw/errors.hpp"
#include "gaw/logvalue.hpp"

namespace gaw {

std::string verdict_string(Verdict v) {
    switch (v) {
        case Verdict::SummableEvidence: return "summable-evidence";
        case Verdict::DivergentEvidence: return "divergent-evidence";
        default: return "inconclusive";
    }
}

SeriesDiagnostics diagnose_series(std::span<const double> log_terms, double delta) {
    SeriesDiagnostics d;
    d.log_terms.assign(log_terms.begin(), log_terms.end());
    const std::size_t n = d.log_terms.size();
    d.log_partial_sums.resize(n);
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        acc = log_add(acc, d.log_terms[i]);
        d.log_partial_sums[i] = acc;
    }
    d.ratios.resize(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double lt = d.log_terms[i], ln = d.log_terms[i + 1];
        bool zt = std::isinf(lt) && lt < 0;
        bool zn = std::isinf(ln) && ln < 0;
        if (zn)
            d.ratios[i] = 0.0;  // series died out
        else if (zt)
            d.ratios[i] = std::numeric_limits<double>::infinity();
        else
            d.ratios[i] = std::exp(ln - lt);
    }
    if (d.ratios.empty()) {
        d.verdict = Verdict::Inconclusive;
        return d;
    }
    const std::size_t window = std::max<std::size_t>(1, d.ratios.size() / 4);
    const std::size_t start = d.ratios.size() - window;
    bool all_below = true, all_above = true;
    for (std::size_t i = start; i < d.ratios.size(); ++i) {
        if (!(d.ratios[i] < 1.0 - delta)) all_below = false;
        if (!(d.ratios[i] > 1.0 + delta)) all_above = false;
    }
    d.verdict = all_below   ? Verdict::SummableEvidence
                : all_above ? Verdict::DivergentEvidence
                            : Verdict::Inconclusive;
    return d;
}

GrowthSeries growth_series_from_table(const LengthTable& table) {
    GrowthSeries s;
    s.group = table.spec().family_string();
    for (auto c : table.sigma())
        s.log_sigma.push_back(c == 0 ? -std::numeric_limits<double>::infinity()
                                     : std::log(static_cast<double>(c)));
    for (auto c : table.beta()) s.log_beta.push_back(std::log(static_cast<double>(c)));
    return s;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

std::optional<std::vector<double>> closed_form_log_sigma(const GroupSpec& spec, int N) {
    if (!spec.has_default_generators()) return std::nullopt;
    std::vector<double> logs(static_cast<std::size_t>(N) + 1, kNegInf);
    logs[0] = 0.0;
    if (const auto* fg = std::get_if<FreeGroup>(&spec.family())) {
        const double q = 2.0 * fg->rank - 1.0;
        for (int n = 1; n <= N; ++n)
            logs[static_cast<std::size_t>(n)] = std::log(2.0 * fg->rank) + (n - 1) * std::log(q);
        return logs;
    }
    if (const auto* fa = std::get_if<FreeAbelian>(&spec.family())) {
        // lattice points with |x|_1 = n: sum_k 2^k C(d,k) C(n-1,k-1)
        for (int n = 1; n <= N; ++n) {
            double count = 0.0;
            for (int k = 1; k <= fa->rank; ++k)
                count += std::pow(2.0, k) * binom(fa->rank, k) * binom(n - 1, k - 1);
            logs[static_cast<std::size_t>(n)] = std::log(count);
        }
        return logs;
    }
    if (const auto* cy = std::get_if<CyclicGroup>(&spec.family())) {
        for (int n = 1; n <= N; ++n) {
            std::int64_t two_n = 2 * static_cast<std::int64_t>(n);
            if (two_n < cy->order)
                logs[static_cast<std::size_t>(n)] = std::log(2.0);
            else if (two_n == cy->order)
                logs[static_cast<std::size_t>(n)] = 0.0;
        }
        return logs;
    }
    if (std::holds_alternative<HeisenbergGroup>(spec.family())) return std::nullopt;
    const auto& dp = std::get<DirectProduct>(spec.family());
    std::vector<double> acc(static_cast<std::size_t>(N) + 1, kNegInf);
    acc[0] = 0.0;
    for (const auto& f : dp.factors) {
        auto part = closed_form_log_sigma(f, N);
        if (!part) return std::nullopt;
        std::vector<double> next(static_cast<std::size_t>(N) + 1, kNegInf);
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k)
                next[static_cast<std::size_t>(n)] =
                    log_add(next[static_cast<std::size_t>(n)],
                            acc[static_cast<std::size_t>(k)] +
                                (*part)[static_cast<std::size_t>(n - k)]);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::optional<GrowthSeries> closed_form_growth_series(const GroupSpec& spec, int N) {
    auto logs = closed_form_log_sigma(spec, N);
    if (!logs) return std::nullopt;
    GrowthSeries s;
    s.group = spec.family_string();
    s.log_sigma = std::move(*logs);
    double acc = kNegInf;
    for (double l : s.log_sigma) {
        acc = log_add(acc, l);
        s.log_beta.push_back(acc);
    }
    return s;
}

GrowthSeries growth_series(const GroupSpec& spec, int N, std::size_t max_elements) {
    if (auto s = closed_form_growth_series(spec, N)) return std::move(*s);
    BallOptions opts;
    opts.max_elements = max_elements;
    return growth_series_from_table(enumerate_ball(spec, N, opts));
}

GroupGrowthClass group_growth_class(const GroupSpec& spec) {
    if (const auto* fg = std::get_if<FreeGroup>(&spec.family()))
        return fg->rank >= 2 ? GroupGrowthClass{GroupGrowthClass::Exponential, 0}
                             : GroupGrowthClass{GroupGrowthClass::Polynomial, 1};
    if (const auto* fa = std::get_if<FreeAbelian>(&spec.family()))
        return {GroupGrowthClass::Polynomial, fa->rank};
    if (std::holds_alternative<CyclicGroup>(spec.family())) return {GroupGrowthClass::Bounded, 0};
    if (std::holds_alternative<HeisenbergGroup>(spec.family()))
        return {GroupGrowthClass::Polynomial, 4};
    const auto& dp = std::get<DirectProduct>(spec.family());
    GroupGrowthClass out{GroupGrowthClass::Bounded, 0};
    for (const auto& f : dp.factors) {
        auto c = group_growth_class(f);
        if (c.kind == GroupGrowthClass::Exponential) return {GroupGrowthClass::Exponential, 0};
        if (c.kind == GroupGrowthClass::Polynomial) {
            out.kind = GroupGrowthClass::Polynomial;
            out.degree += c.degree;
        }
    }
    return out;
}

std::optional<bool> symbolic_nuclear(const GroupSpec& spec, const GrowthFunction& sigma) {
    auto cls = sigma.symbolic_class();
    if (!cls) return std::nullopt;
    auto gc = group_growth_class(spec);
    if (gc.kind != GroupGrowthClass::Exponential) return true;  // at most polynomial volume growth
    // exponential volume growth: need sigma at least in the exp(n) class
    return !(*cls < GrowthFunction::SymbolicClass{1.0, 1});
}

namespace {

std::vector<double> gp_log_terms(const GrowthSeries& series, const GrowthFunction& sigma, double rho,
                                 int N) {
    if (N > series.radius()) throw OutOfBallError("requested range exceeds the series radius");
    std::vector<double> terms(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        double ls = series.log_sigma[static_cast<std::size_t>(n)];
        terms[static_cast<std::size_t>(n)] =
            std::isinf(ls) ? kNegInf : ls - rho * sigma.log_at(n);
    }
    return terms;
}

}  // namespace

std::vector<double> gp_log_partial_sums(const GrowthSeries& series, const GrowthFunction& sigma,
                                        double rho, int N) {
    return diagnose_series(gp_log_terms(series, sigma, rho, N)).log_partial_sums;
}

std::vector<double> gp_log_partial_sums(const LengthTable& table, const GrowthFunction& sigma,
                                        double rho, int N) {
    return gp_log_partial_sums(growth_series_from_table(table), sigma, rho, N);
}

GPReport gp_verdict(const GroupSpec& spec, const GrowthSeries& series, const GrowthFunction& sigma,
                    std::span<const double> rho_grid, int N, double delta) {
    GPReport rep;
    rep.group = series.group;
    rep.sigma = sigma.to_string();
    rep.N = N;
    rep.rho_grid.assign(rho_grid.begin(), rho_grid.end());
    bool any_summable = false, all_divergent = true;
    for (double rho : rho_grid) {
        rep.per_rho.push_back(diagnose_series(gp_log_terms(series, sigma, rho, N), delta));
        auto v = rep.per_rho.back().verdict;
        if (v == Verdict::SummableEvidence) any_summable = true;
        if (v != Verdict::DivergentEvidence) all_divergent = false;
    }
    rep.verdict = any_summable    ? Verdict::SummableEvidence
                  : all_divergent ? Verdict::DivergentEvidence
                                  : Verdict::Inconclusive;
    rep.symbolic = symbolic_nuclear(spec, sigma);
    if (rep.symbolic.has_value()) {
        if (rep.verdict == Verdict::SummableEvidence && !*rep.symbolic) rep.consistent = false;
        if (rep.verdict == Verdict::DivergentEvidence && *rep.symbolic) rep.consistent = false;
    }
    return rep;
}

GPReport gp_verdict(const LengthTable& table, const GrowthFunction& sigma,
                    std::span<const double> rho_grid, int N, double delta) {
    return gp_verdict(table.spec(), growth_series_from_table(table), sigma, rho_grid, N, delta);
}

GrowthFunction sampled_sigma(const GrowthSeries& series) {
    return GrowthFunction::sampled(series.log_sigma, "sigma_" + series.group);
}

GrowthFunction sampled_beta(const GrowthSeries& series) {
    return GrowthFunction::sampled(series.log_beta, "beta_" + series.group);
}

GrowthFunction sampled_sigma(const LengthTable& table) {
    return sampled_sigma(growth_series_from_table(table));
}

GrowthFunction sampled_beta(const LengthTable& table) {
    return sampled_beta(growth_series_from_table(table));
}

SurfaceVolumeReport surface_vs_volume(const GrowthSeries& series, const GrowthFunction& sigma,
                                      std::int64_t c_max, std::int64_t k_max) {
    if (series.radius() < 4) throw OutOfBallError("surface/volume comparison needs radius >= 4");
    SurfaceVolumeReport rep;
    GrowthFunction sg = sampled_sigma(series);
    GrowthFunction bg = sampled_beta(series);
    const std::int64_t N = series.radius();
    rep.sigma_witness = search_witness(sg, sigma, c_max, k_max, N);
    rep.beta_witness = search_witness(bg, sigma, c_max, k_max, N);
    if (rep.sigma_witness) {
        // volume bound assembled from the surface witness:
        // beta_G(n) = sum sigma_G(l) <= (1+n) c sigma(cn)^k
        rep.construction_bound_holds = true;
        const auto [c, k, range] = *rep.sigma_witness;
        for (std::int64_t n = 0; n <= range; ++n) {
            double lhs = bg.log_at(n);
            double rhs = std::log(static_cast<double>(c)) + std::log1p(static_cast<double>(n)) +
                         static_cast<double>(k) * sigma.log_at(c * n);
            if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) {
                rep.construction_bound_holds = false;
                break;
            }
        }
    }
    rep.agree = rep.sigma_witness.has_value() == rep.beta_witness.has_value();
    return rep;
}

SurfaceVolumeReport surface_vs_volume(const LengthTable& table, const GrowthFunction& sigma,
                                      std::int64_t c_max, std::int64_t k_max) {
    return surface_vs_volume(growth_series_from_table(table), sigma, c_max, k_max);
}

SandwichResult norm_sandwich(const LengthTable& table, const GrowthFunction& sigma, double R,
                             std::span<const AlgebraElement> samples,
                             std::span<const double> rprime_offsets, double delta, double tol) {
    SandwichResult res;
    const int N = table.radius();
    const GrowthSeries series = growth_series_from_table(table);
    for (double off : rprime_offsets) {
        if (!(off > 0)) continue;
        double R_prime = R + off;
        // candidate constant: sum_g sigma(L(g))^-(R'-R), truncated + tail bound
        auto terms = gp_log_terms(series, sigma, off, N);
        auto diag = diagnose_series(terms, delta);
        if (diag.verdict != Verdict::SummableEvidence) continue;
        const std::size_t window = std::max<std::size_t>(1, diag.ratios.size() / 4);
        double rstar = 0.0;
        for (std::size_t i = diag.ratios.size() - window; i < diag.ratios.size(); ++i)
            rstar = std::max(rstar, diag.ratios[i]);
        double log_c = diag.log_partial_sums.back();
        if (rstar > 0.0)
            log_c = log_add(log_c, terms.back() + std::log(rstar) - std::log1p(-rstar));
        LogValue c = LogValue::from_log(log_c);
        bool ok = true;
        for (const auto& a : samples) {
            if (!log_leq(norm_l1(a, sigma, R, table), c * norm_sup(a, sigma, R_prime, table), tol)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.found = true;
            res.R_prime = R_prime;
            res.log_c = log_c;
            res.checked_samples = samples.size();
            return res;
        }
    }
    return res;
}

AlgebraElement complete_growth_shell(const LengthTable& table, int n) {
    auto [lo, hi] = table.shell(n);
    AlgebraElement out(std::make_shared<GroupSpec>(table.spec()));
    for (std::size_t i = lo; i < hi; ++i) out.add_term(table.element(i), Coeff(1.0, 0.0));
    return out;
}

CompleteGrowthReport complete_growth_tail(const GrowthSeries& series, const GrowthFunction& sigma,
                                          double R, double z, int N, double delta) {
    if (std::abs(z) > 1.0 + 1e-15) throw ParseError("|z| must be <= 1");
    if (N > series.radius()) throw OutOfBallError("requested range exceeds the series radius");
    CompleteGrowthReport rep;
    rep.z = z;
    rep.R = R;
    rep.N = N;
    std::vector<double> terms(static_cast<std::size_t>(N) + 1);
    const double labs = std::abs(z) == 0.0 ? kNegInf : std::log(std::abs(z));
    for (int n = 0; n <= N; ++n) {
        double ls = series.log_sigma[static_cast<std::size_t>(n)];
        if (std::isinf(ls) || (n > 0 && std::isinf(labs))) {
            terms[static_cast<std::size_t>(n)] = kNegInf;
            continue;
        }
        terms[static_cast<std::size_t>(n)] = (n == 0 ? 0.0 : n * labs) + ls - R * sigma.log_at(n);
    }
    rep.series = diagnose_series(terms, delta);
    rep.tail_sum = std::exp(rep.series.log_partial_sums.back());
    return rep;
}

CompleteGrowthReport complete_growth_tail(const LengthTable& table, const GrowthFunction& sigma,
                                          double R, double z, int N, double delta) {
    return complete_growth_tail(growth_series_from_table(table), sigma, R, z, N, delta);
}

std::optional<double> minimal_R(const GrowthSeries& series, const GrowthFunction& sigma, double z,
                                std::span<const double> R_grid, int N, double delta) {
    std::vector<double> grid(R_grid.begin(), R_grid.end());
    std::sort(grid.begin(), grid.end());
    for (double R : grid) {
        if (complete_growth_tail(series, sigma, R, z, N, delta).series.verdict ==
            Verdict::SummableEvidence)
            return R;
    }
    return std::nullopt;
}

std::optional<double> minimal_R(const LengthTable& table, const GrowthFunction& sigma, double z,
                                std::span<const double> R_grid, int N, double delta) {
    return minimal_R(growth_series_from_table(table), sigma, z, R_grid, N, delta);
}

}  // namespace gaw
