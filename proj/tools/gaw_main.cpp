#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaw/algebra.hpp"
#include "gaw/ball.hpp"
#include "gaw/bw.hpp"
#include "gaw/diagnostics.hpp"
#include "gaw/errors.hpp"
#include "gaw/growth.hpp"
#include "gaw/io.hpp"
#include "gaw/morphism.hpp"
#include "gaw/norms.hpp"
#include "gaw/rng.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalOpts {
    std::string cache_dir = ".";
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    std::size_t ball_cap = 5'000'000;
};

gaw::LengthTable make_table(const gaw::GroupSpec& spec, int radius, const GlobalOpts& g) {
    gaw::BallOptions opts;
    opts.max_elements = g.ball_cap;
    return gaw::enumerate_ball(spec, radius, opts);
}

std::filesystem::path cache_path(const GlobalOpts& g, const gaw::GroupSpec& spec, int radius) {
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(gaw::fnv1a64(spec.canonical_string())));
    return std::filesystem::path(g.cache_dir) /
           ("ball-" + std::string(hex) + "-r" + std::to_string(radius) + ".txt");
}

gaw::LengthTable table_with_cache(const gaw::GroupSpec& spec, int radius, bool use_cache,
                                  const GlobalOpts& g) {
    if (!use_cache) return make_table(spec, radius, g);
    auto path = cache_path(g, spec, radius);
    if (std::filesystem::exists(path)) return gaw::read_ball_cache(spec, path);
    gaw::LengthTable table = make_table(spec, radius, g);
    std::filesystem::create_directories(path.parent_path());
    gaw::write_ball_cache(table, path);
    return table;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw gaw::ParseError("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

std::vector<double> default_grid() {
    std::vector<double> g;
    for (double x = 0.5; x <= 8.0 + 1e-12; x += 0.5) g.push_back(x);
    return g;
}

std::vector<double> parse_grid(const std::string& text) {
    if (text.empty()) return default_grid();
    std::vector<double> g;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) g.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (g.empty()) throw gaw::ParseError("empty grid");
    return g;
}

json series_json(const gaw::SeriesDiagnostics& d) {
    json j;
    j["log_partial_sums"] = d.log_partial_sums;
    j["ratios"] = d.ratios;
    j["verdict"] = gaw::verdict_string(d.verdict);
    return j;
}

int run_ball(const std::string& group, const std::string& gens, int radius, bool use_cache,
             const std::string& out_prefix, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    gaw::LengthTable table = table_with_cache(spec, radius, use_cache, g);
    std::string prefix = out_prefix.empty() ? "ball" : out_prefix;
    gaw::write_sigma_beta_csv(table, prefix + "_growth.csv");
    std::cout << "group " << spec.family_string() << " radius " << radius << " elements "
              << table.size() << "\n";
    std::cout << "generators";
    for (const auto& e : spec.generators()) std::cout << " " << spec.element_to_string(e);
    std::cout << "\n";
    std::cout << "sigma/beta written to " << prefix << "_growth.csv\n";
    return kExitOk;
}

int run_growth(const std::string& s1, const std::string& s2, int check_submult, double fit_eps,
               int range, std::int64_t cmax, std::int64_t kmax, const std::string& out) {
    json j;
    gaw::GrowthFunction a = gaw::parse_growth(s1);
    j["sigma"] = a.to_string();
    if (check_submult >= 0) {
        auto v = gaw::check_submultiplicative(a, check_submult);
        j["submultiplicative"]["range"] = check_submult;
        j["submultiplicative"]["holds"] = v.holds;
        if (v.counterexample) {
            j["submultiplicative"]["counterexample"] = {v.counterexample->first,
                                                        v.counterexample->second};
        }
    }
    if (fit_eps > 0) {
        j["almost_submultiplicative"]["eps"] = fit_eps;
        j["almost_submultiplicative"]["range"] = range;
        j["almost_submultiplicative"]["c"] = gaw::fit_almost_submultiplicative(a, fit_eps, range);
        j["almost_submultiplicative"]["c_doubled_range"] =
            gaw::fit_almost_submultiplicative(a, fit_eps, 2 * range);
    }
    bool violation = false;
    if (!s2.empty()) {
        gaw::GrowthFunction b = gaw::parse_growth(s2);
        j["sigma_prime"] = b.to_string();
        auto cmp = gaw::symbolic_compare(a, b);
        j["symbolic"] = cmp == gaw::CompareResult::Precedes     ? "precedes"
                        : cmp == gaw::CompareResult::Succeeds   ? "succeeds"
                        : cmp == gaw::CompareResult::Equivalent ? "equivalent"
                                                                : "unknown";
        auto w = gaw::search_witness(a, b, cmax, kmax, range);
        if (w) {
            j["witness"] = {{"c", w->c}, {"k", w->k}, {"checked_range", w->checked_range}};
        } else {
            j["witness"] = nullptr;
            j["witness_note"] =
                "not found up to c_max=" + std::to_string(cmax) + ", k_max=" + std::to_string(kmax);
        }
        // rule table cross-check: a symbolic verdict must be backed by a witness
        if ((cmp == gaw::CompareResult::Precedes || cmp == gaw::CompareResult::Equivalent) && !w)
            violation = true;
    }
    emit(j, out);
    return violation ? kExitViolation : kExitOk;
}

int run_norm(const std::string& group, const std::string& gens, const std::string& file,
             const std::string& sigma_text, double R, const std::string& p_text, int radius,
             const std::string& profile_csv, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    auto spec_ptr = std::make_shared<gaw::GroupSpec>(spec);
    gaw::AlgebraElement a = gaw::read_element_file(spec_ptr, file);
    gaw::GrowthFunction sigma = gaw::parse_growth(sigma_text);
    gaw::LengthTable table = make_table(spec, radius, g);
    double p = p_text == "inf" ? std::numeric_limits<double>::infinity() : std::stod(p_text);
    gaw::LogValue v = gaw::norm(a, gaw::NormSpec{p, sigma, R, &table});
    json j;
    j["group"] = spec.family_string();
    j["sigma"] = sigma.to_string();
    j["R"] = R;
    j["p"] = p_text;
    j["log_norm"] = v.is_zero() ? nullptr : json(v.log());
    j["norm"] = v.is_zero() ? json(0.0) : json(v.value());
    if (!profile_csv.empty()) {
        // per-shell suprema of |a_g| / sigma(L(g))^R, the decay profile
        auto profile = gaw::c0_tail_profile(a, sigma, R, table);
        std::vector<double> logs;
        logs.reserve(profile.size());
        for (const auto& lv : profile) logs.push_back(lv.log());
        gaw::write_series_csv(logs, "log_profile", profile_csv);
        j["profile_csv"] = profile_csv;
    }
    emit(j, "");
    return kExitOk;
}

int run_conv(const std::string& group, const std::string& gens, const std::string& afile,
             const std::string& bfile, const std::string& outfile, const std::string& sigma_text,
             double R, double eps, int radius, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    auto spec_ptr = std::make_shared<gaw::GroupSpec>(spec);
    gaw::AlgebraElement a = gaw::read_element_file(spec_ptr, afile);
    gaw::AlgebraElement b = gaw::read_element_file(spec_ptr, bfile);
    gaw::AlgebraElement ab = gaw::convolve(a, b);
    if (!outfile.empty()) gaw::write_element_file(ab, outfile);
    json j;
    j["support"] = ab.support_size();
    bool ok = true;
    if (!sigma_text.empty()) {
        gaw::GrowthFunction sigma = gaw::parse_growth(sigma_text);
        gaw::LengthTable table = make_table(spec, radius, g);
        std::optional<double> eps_opt;
        if (eps > 0) eps_opt = eps;
        auto rep = gaw::check_product_inequality(a, b, sigma, R, table, eps_opt, g.tolerance);
        j["product_inequality"]["holds"] = rep.holds;
        j["product_inequality"]["lhs_log"] = rep.lhs.is_zero() ? nullptr : json(rep.lhs.log());
        j["product_inequality"]["rhs_log"] = rep.rhs.is_zero() ? nullptr : json(rep.rhs.log());
        if (rep.almost_mode) j["product_inequality"]["fitted_c"] = rep.fitted_c;
        ok = rep.holds;
    }
    emit(j, "");
    return ok ? kExitOk : kExitViolation;
}

int run_hopf(const std::string& group, const std::string& gens, const std::string& afile,
             const std::string& sigma_text, double R, int radius, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    auto spec_ptr = std::make_shared<gaw::GroupSpec>(spec);
    gaw::AlgebraElement a = gaw::read_element_file(spec_ptr, afile);
    json j;
    bool ok = true;

    // structural identities
    gaw::AlgebraElement ss = gaw::antipode(gaw::antipode(a));
    j["antipode_involutive"] = (ss == a);
    ok = ok && (ss == a);
    gaw::AlgebraElement recovered = gaw::counit_left(gaw::coproduct(a));
    j["counit_axiom"] = (recovered == a);
    ok = ok && (recovered == a);

    if (!sigma_text.empty()) {
        gaw::GrowthFunction sigma = gaw::parse_growth(sigma_text);
        gaw::LengthTable table = make_table(spec, radius, g);
        gaw::LogValue lhs = gaw::tensor_norm(gaw::coproduct(a), sigma, R, table);
        gaw::LogValue rhs = gaw::norm_l1(a, sigma, 2 * R, table);
        bool eq = gaw::log_close(lhs, rhs, g.tolerance);
        j["coproduct_norm_identity"]["holds"] = eq;
        j["coproduct_norm_identity"]["lhs_log"] = lhs.is_zero() ? nullptr : json(lhs.log());
        j["coproduct_norm_identity"]["rhs_log"] = rhs.is_zero() ? nullptr : json(rhs.log());
        ok = ok && eq;
    }
    emit(j, "");
    return ok ? kExitOk : kExitViolation;
}

int run_nuclearity(const std::string& group, const std::string& gens, const std::string& sigma_text,
                   const std::string& grid_text, int N, double delta, const std::string& csv,
                   const std::string& out, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    gaw::GrowthFunction sigma = gaw::parse_growth(sigma_text);
    gaw::GrowthSeries series = gaw::growth_series(spec, N, g.ball_cap);
    auto grid = parse_grid(grid_text);
    gaw::GPReport rep = gaw::gp_verdict(spec, series, sigma, grid, N, delta);
    json j;
    j["group"] = rep.group;
    j["generators"] = json::array();
    for (const auto& e : spec.generators()) j["generators"].push_back(spec.element_to_string(e));
    j["sigma"] = rep.sigma;
    j["N"] = rep.N;
    j["grid"] = rep.rho_grid;
    j["partial_sums"] = json::array();
    j["ratios"] = json::array();
    for (const auto& d : rep.per_rho) {
        j["partial_sums"].push_back(d.log_partial_sums);
        j["ratios"].push_back(d.ratios);
    }
    j["verdict"] = gaw::verdict_string(rep.verdict);
    if (rep.symbolic) j["symbolic_verdict"] = *rep.symbolic ? "nuclear" : "not-nuclear";
    j["consistent"] = rep.consistent;
    if (!csv.empty() && !rep.per_rho.empty())
        gaw::write_series_csv(rep.per_rho.front().log_partial_sums, "log_partial_sum", csv);
    emit(j, out);
    return rep.consistent ? kExitOk : kExitViolation;
}

int run_complete_growth(const std::string& group, const std::string& gens,
                        const std::string& sigma_text, double z, double R, int N,
                        const std::string& grid_text, double delta, const std::string& csv,
                        const std::string& out, const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    gaw::GrowthFunction sigma = gaw::parse_growth(sigma_text);
    gaw::GrowthSeries series = gaw::growth_series(spec, N, g.ball_cap);
    gaw::CompleteGrowthReport rep = gaw::complete_growth_tail(series, sigma, R, z, N, delta);
    json j;
    j["group"] = spec.family_string();
    j["sigma"] = sigma.to_string();
    j["z"] = z;
    j["R"] = R;
    j["N"] = N;
    j["tail_sum"] = rep.tail_sum;
    j["series"] = series_json(rep.series);
    auto grid = parse_grid(grid_text);
    auto minR = gaw::minimal_R(series, sigma, z, grid, N, delta);
    j["minimal_R"] = minR ? json(*minR) : json(nullptr);
    if (!csv.empty()) gaw::write_series_csv(rep.series.log_partial_sums, "log_partial_sum", csv);
    emit(j, out);
    return kExitOk;
}

int run_bw(const std::string& group, const std::string& gens, double rho, int m,
           const std::string& afile, std::uint64_t ell, int truncation, const std::string& base,
           bool verify, double verify_eps, double verify_R, const std::string& out,
           const GlobalOpts& g) {
    gaw::GroupSpec spec = gaw::parse_group(group, gens);
    auto spec_ptr = std::make_shared<gaw::GroupSpec>(spec);
    gaw::AlgebraElement a = gaw::read_element_file(spec_ptr, afile);
    const bool closed_form = spec.closed_form_length(spec.identity()).has_value();
    int radius = closed_form ? truncation : 2 * truncation;
    gaw::LengthTable table = make_table(spec, radius, g);
    auto levels = gaw::compute_bw_levels(a, rho, m, ell, truncation, table);
    json j;
    j["rho"] = rho;
    j["m"] = m;
    j["ell"] = ell;
    j["truncation"] = truncation;
    json values = json::array(), tails = json::array(), points = json::array();
    const double root = 1.0 / static_cast<double>(std::uint64_t{1} << m);
    for (std::size_t k = 0; k < levels.ball_size; ++k) {
        points.push_back(spec.element_to_string(table.element(k)));
        values.push_back(std::isinf(levels.log_h[k]) ? json(nullptr)
                                                     : json(levels.log_h[k] * root));
        tails.push_back(levels.tail_fractions[k] * root);
    }
    j["base_points"] = points;
    j["values"] = values;  // log seminorm values, 2^m-th roots applied
    j["tail_bounds"] = tails;
    j["fitted_constants"] = json::object();
    if (verify) {
        gaw::ComparisonParams params;
        params.truncation_radius = truncation;
        params.seed = g.seed;
        auto rep = gaw::verify_comparison(rho, m, verify_eps, verify_R, table, params);
        j["fitted_constants"]["norm_constant"] = rep.norm_constant;
        j["fitted_constants"]["norm_constant_doubled"] = rep.norm_constant_doubled;
        j["fitted_constants"]["h_constant"] = rep.h_constant;
        j["fitted_constants"]["h_constant_doubled"] = rep.h_constant_doubled;
        j["comparison_holds"] = rep.holds;
        emit(j, out);
        return rep.holds ? kExitOk : kExitViolation;
    }
    if (!base.empty()) {
        gaw::BWConfig cfg;
        cfg.rho = rho;
        cfg.depth = m;
        cfg.index = ell;
        cfg.base_point = spec.parse_element(base);
        cfg.truncation_radius = truncation;
        auto v = gaw::bw_seminorm(a, cfg, table);
        j["seminorm_at_base"] = v.value.is_zero() ? json(0.0) : json(v.value.value());
        j["seminorm_tail_fraction"] = v.tail_fraction;
    }
    emit(j, out);
    return kExitOk;
}

json verify_all_report(const GlobalOpts& g);

int run_verify_all(const std::string& out, const GlobalOpts& g) {
    json j = verify_all_report(g);
    emit(j, out);
    bool ok = j["all_checks_passed"].get<bool>();
    return ok ? kExitOk : kExitViolation;
}

// Deterministic battery used for reproducibility checks; every numeric field
// derives from the seed and fixed parameters only.
json verify_all_report(const GlobalOpts& g) {
    json j;
    j["seed"] = g.seed;
    bool all_ok = true;
    auto record = [&](const char* key, bool ok) {
        j["checks"][key] = ok;
        all_ok = all_ok && ok;
    };

    // growth tables
    {
        auto z = gaw::enumerate_ball(gaw::parse_group("z"), 20);
        bool ok = true;
        for (int n = 1; n <= 20; ++n) ok = ok && z.sigma()[static_cast<std::size_t>(n)] == 2;
        record("sigma_z_constant", ok);
        auto f2 = gaw::enumerate_ball(gaw::parse_group("f2"), 8);
        bool okf = true;
        for (int n = 0; n <= 8; ++n) {
            std::uint64_t expect = n == 0 ? 1 : 2 * static_cast<std::uint64_t>(std::pow(3.0, n)) - 1;
            okf = okf && f2.beta()[static_cast<std::size_t>(n)] == expect;
        }
        record("beta_f2_closed_form", okf);
        j["values"]["beta_f2_8"] = f2.beta()[8];
    }

    // norm identities on seeded elements
    {
        auto spec = gaw::parse_group("z2");
        auto table = gaw::enumerate_ball(spec, 8);
        gaw::Rng rng(g.seed);
        gaw::GrowthFunction sigma = gaw::parse_growth("poly(1,1)");
        double max_schauder = 0.0, max_coproduct = 0.0;
        bool product_ok = true, bimodule_ok = true;
        for (int t = 0; t < 32; ++t) {
            auto a = gaw::random_sparse_element(table, rng, 5, 3);
            auto b = gaw::random_sparse_element(table, rng, 5, 3);
            double R = 2.0;
            gaw::LogValue n1 = gaw::norm_l1(a, sigma, R, table);
            gaw::LogValue lhs = gaw::LogValue::zero();
            for (const auto& [e, z] : a.coefficients())
                lhs += gaw::LogValue::from_value(std::abs(z)) *
                       gaw::LogValue::from_log(R * sigma.log_at(table.word_length(e)));
            max_schauder = std::max(max_schauder, std::abs(lhs.log() - n1.log()));
            gaw::LogValue cop = gaw::tensor_norm(gaw::coproduct(a), sigma, R, table);
            gaw::LogValue n2 = gaw::norm_l1(a, sigma, 2 * R, table);
            max_coproduct = std::max(max_coproduct, std::abs(cop.log() - n2.log()));
            product_ok =
                product_ok && gaw::check_product_inequality(a, b, sigma, R, table).holds;
            bimodule_ok =
                bimodule_ok && gaw::check_bimodule_estimate(a, b, sigma, R, table).holds;
        }
        j["values"]["max_schauder_log_error"] = max_schauder;
        j["values"]["max_coproduct_log_error"] = max_coproduct;
        record("schauder_identity", max_schauder <= g.tolerance);
        record("coproduct_identity", max_coproduct <= g.tolerance);
        record("product_inequality", product_ok);
        record("bimodule_estimates", bimodule_ok);
    }

    // factorial weights in almost-submultiplicative mode
    {
        auto spec = gaw::parse_group("z");
        auto table = gaw::enumerate_ball(spec, 16);
        gaw::Rng rng(g.seed + 1);
        gaw::GrowthFunction fact = gaw::GrowthFunction::factorial();
        bool ok = true;
        double fitted = 0.0;
        for (int t = 0; t < 16; ++t) {
            auto a = gaw::random_sparse_element(table, rng, 4, 6);
            auto b = gaw::random_sparse_element(table, rng, 4, 6);
            auto rep = gaw::check_product_inequality(a, b, fact, 2.0, table, 0.5, g.tolerance);
            ok = ok && rep.holds;
            fitted = rep.fitted_c;
        }
        j["values"]["factorial_fitted_c"] = fitted;
        record("factorial_product_inequality", ok);
    }

    // nuclearity dichotomy
    {
        auto grid = default_grid();
        struct Case {
            const char* group;
            const char* sigma;
            int N;
        };
        const Case cases[] = {{"f2", "poly(1,1)", 10},  {"z2", "poly(1,1)", 40},
                              {"z", "poly(1,1)", 40},   {"f2", "subexp(1)", 10},
                              {"f2", "factorial", 10},  {"z3", "subexp(0.5)", 24}};
        json arr = json::array();
        bool consistent = true;
        for (const auto& c : cases) {
            auto spec = gaw::parse_group(c.group);
            auto series = gaw::growth_series(spec, c.N);
            auto rep = gaw::gp_verdict(spec, series, gaw::parse_growth(c.sigma), grid, c.N);
            json row;
            row["group"] = c.group;
            row["sigma"] = c.sigma;
            row["verdict"] = gaw::verdict_string(rep.verdict);
            row["symbolic_nuclear"] = rep.symbolic ? json(*rep.symbolic) : json(nullptr);
            arr.push_back(row);
            consistent = consistent && rep.consistent;
        }
        j["values"]["nuclearity_cases"] = arr;
        record("nuclearity_consistent", consistent);
    }

    // complete growth closed form
    {
        auto spec = gaw::parse_group("f2");
        auto series = gaw::growth_series(spec, 30);
        auto rep = gaw::complete_growth_tail(series, gaw::parse_growth("subexp(1)"), 2.0, 1.0, 30);
        double q = 3.0 / std::exp(2.0);
        double expect = 1.0 + (4.0 / 3.0) * q / (1.0 - q);
        j["values"]["complete_growth_tail_f2"] = rep.tail_sum;
        record("complete_growth_closed_form", std::abs(rep.tail_sum - expect) < 1e-6);
        std::vector<double> grid = default_grid();
        auto minR = gaw::minimal_R(series, gaw::parse_growth("subexp(1)"), 1.0, grid, 30);
        j["values"]["complete_growth_minimal_R"] = minR ? json(*minR) : json(nullptr);
        record("complete_growth_minimal_R_found", minR.has_value());
    }

    // recursive seminorms
    {
        auto spec = gaw::parse_group("z");
        auto spec_ptr = std::make_shared<gaw::GroupSpec>(spec);
        auto table = gaw::enumerate_ball(spec, 12);
        auto unit = gaw::AlgebraElement::unit(spec_ptr);
        auto levels = gaw::compute_bw_levels(unit, 1.0, 1, 0, 12, table);
        bool ok = true;
        for (std::size_t k = 0; k < levels.ball_size; ++k) ok = ok && levels.log_h[k] == 0.0;
        record("bw_unit_level1", ok);
        gaw::ComparisonParams params;
        params.truncation_radius = 12;
        params.support_radius = 4;
        params.seed = g.seed;
        auto rep = gaw::verify_comparison(1.0, 2, 0.05, 0.5, table, params);
        j["values"]["bw_norm_constant"] = rep.norm_constant;
        j["values"]["bw_h_constant"] = rep.h_constant;
        record("bw_comparison", rep.holds);
    }

    j["all_checks_passed"] = all_ok;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale workbench for weighted group algebras"};
    app.set_config("--config");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "directory for ball caches");
    app.add_option("--seed", g.seed, "seed for randomized fitting commands");
    app.add_option("--tolerance", g.tolerance, "relative tolerance for checks");
    app.add_option("--caps", g.ball_cap, "ball element-count cap");

    // ball
    auto* ball = app.add_subcommand("ball", "enumerate a Cayley ball and export growth data");
    std::string ball_group, ball_gens, ball_prefix;
    int ball_radius = 0;
    bool ball_cache = false;
    ball->add_option("group", ball_group)->required();
    ball->add_option("radius", ball_radius)->required();
    ball->add_option("--gens", ball_gens, "custom generator list (semicolon separated)");
    ball->add_flag("--cache", ball_cache, "reuse/write the ball cache");
    ball->add_option("--out-prefix", ball_prefix);

    // growth
    auto* growth = app.add_subcommand("growth", "compare growth functions / check properties");
    std::string growth_a, growth_b, growth_out;
    int growth_submult = -1, growth_range = 64;
    double growth_fit_eps = 0.0;
    std::int64_t growth_cmax = 8, growth_kmax = 8;
    growth->add_option("sigma", growth_a)->required();
    growth->add_option("sigma_prime", growth_b);
    growth->add_option("--check-submult", growth_submult, "check submultiplicativity up to N");
    growth->add_option("--fit-eps", growth_fit_eps, "fit the almost-submultiplicative constant");
    growth->add_option("--range", growth_range);
    growth->add_option("--witness-c", growth_cmax);
    growth->add_option("--witness-k", growth_kmax);
    growth->add_option("--out", growth_out);

    // norm
    auto* norm = app.add_subcommand("norm", "weighted norm of an element file");
    std::string norm_group, norm_gens, norm_file, norm_sigma, norm_p = "1", norm_profile;
    double norm_R = 0.0;
    int norm_radius = 8;
    norm->add_option("group", norm_group)->required();
    norm->add_option("file", norm_file)->required();
    norm->add_option("sigma", norm_sigma)->required();
    norm->add_option("R", norm_R)->required();
    norm->add_option("--p", norm_p, "1 <= p, or 'inf'");
    norm->add_option("--radius", norm_radius);
    norm->add_option("--gens", norm_gens);
    norm->add_option("--profile-csv", norm_profile, "write the per-shell decay profile");

    // conv
    auto* conv = app.add_subcommand("conv", "convolve two element files");
    std::string conv_group, conv_gens, conv_a, conv_b, conv_out, conv_sigma;
    double conv_R = 0.0, conv_eps = 0.0;
    int conv_radius = 8;
    conv->add_option("group", conv_group)->required();
    conv->add_option("a", conv_a)->required();
    conv->add_option("b", conv_b)->required();
    conv->add_option("--out", conv_out);
    conv->add_option("--check-submult", conv_sigma, "growth function for the product inequality");
    conv->add_option("--R", conv_R);
    conv->add_option("--eps", conv_eps, "almost-submultiplicative mode");
    conv->add_option("--radius", conv_radius);
    conv->add_option("--gens", conv_gens);

    // hopf
    auto* hopf = app.add_subcommand("hopf", "Hopf structure checks on an element file");
    std::string hopf_group, hopf_gens, hopf_a, hopf_sigma;
    double hopf_R = 0.0;
    int hopf_radius = 8;
    hopf->add_option("group", hopf_group)->required();
    hopf->add_option("a", hopf_a)->required();
    hopf->add_option("--check-coproduct", hopf_sigma, "growth function for the norm identity");
    hopf->add_option("--R", hopf_R);
    hopf->add_option("--radius", hopf_radius);
    hopf->add_option("--gens", hopf_gens);

    // nuclearity
    auto* nuc = app.add_subcommand("nuclearity", "summability diagnostics for (G, sigma)");
    std::string nuc_group, nuc_gens, nuc_sigma, nuc_grid, nuc_csv, nuc_out;
    int nuc_N = 24;
    double nuc_delta = 0.05;
    nuc->add_option("group", nuc_group)->required();
    nuc->add_option("sigma", nuc_sigma)->required();
    nuc->add_option("--rho-grid", nuc_grid, "comma separated; default 0.5..8 step 0.5");
    nuc->add_option("--N", nuc_N);
    nuc->add_option("--delta", nuc_delta);
    nuc->add_option("--csv", nuc_csv);
    nuc->add_option("--out", nuc_out);
    nuc->add_option("--gens", nuc_gens);

    // complete-growth
    auto* cg = app.add_subcommand("complete-growth", "complete growth series convergence");
    std::string cg_group, cg_gens, cg_sigma, cg_grid, cg_csv, cg_out;
    double cg_z = 1.0, cg_R = 0.0, cg_delta = 0.05;
    int cg_N = 24;
    cg->add_option("group", cg_group)->required();
    cg->add_option("sigma", cg_sigma)->required();
    cg->add_option("z", cg_z)->required();
    cg->add_option("R", cg_R)->required();
    cg->add_option("N", cg_N)->required();
    cg->add_option("--R-grid", cg_grid);
    cg->add_option("--delta", cg_delta);
    cg->add_option("--csv", cg_csv);
    cg->add_option("--out", cg_out);
    cg->add_option("--gens", cg_gens);

    // bw
    auto* bw = app.add_subcommand("bw", "recursive seminorm evaluation");
    std::string bw_group, bw_gens, bw_file, bw_base, bw_out;
    double bw_rho = 1.0, bw_verify_eps = 0.05, bw_verify_R = 0.5;
    int bw_m = 1, bw_trunc = 8;
    std::uint64_t bw_ell = 0;
    bool bw_verify = false;
    bw->add_option("group", bw_group)->required();
    bw->add_option("rho", bw_rho)->required();
    bw->add_option("m", bw_m)->required();
    bw->add_option("file", bw_file)->required();
    bw->add_option("--ell", bw_ell);
    bw->add_option("--truncation", bw_trunc);
    bw->add_option("--base", bw_base, "report the seminorm at this element");
    bw->add_flag("--verify", bw_verify, "fit the comparison constants");
    bw->add_option("--verify-eps", bw_verify_eps);
    bw->add_option("--verify-R", bw_verify_R);
    bw->add_option("--out", bw_out);
    bw->add_option("--gens", bw_gens);

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run the deterministic check battery");
    std::string verify_out;
    verify->add_option("--out", verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ball->parsed())
            return run_ball(ball_group, ball_gens, ball_radius, ball_cache, ball_prefix, g);
        if (growth->parsed())
            return run_growth(growth_a, growth_b, growth_submult, growth_fit_eps, growth_range,
                              growth_cmax, growth_kmax, growth_out);
        if (norm->parsed())
            return run_norm(norm_group, norm_gens, norm_file, norm_sigma, norm_R, norm_p,
                            norm_radius, norm_profile, g);
        if (conv->parsed())
            return run_conv(conv_group, conv_gens, conv_a, conv_b, conv_out, conv_sigma, conv_R,
                            conv_eps, conv_radius, g);
        if (hopf->parsed())
            return run_hopf(hopf_group, hopf_gens, hopf_a, hopf_sigma, hopf_R, hopf_radius, g);
        if (nuc->parsed())
            return run_nuclearity(nuc_group, nuc_gens, nuc_sigma, nuc_grid, nuc_N, nuc_delta,
                                  nuc_csv, nuc_out, g);
        if (cg->parsed())
            return run_complete_growth(cg_group, cg_gens, cg_sigma, cg_z, cg_R, cg_N, cg_grid,
                                       cg_delta, cg_csv, cg_out, g);
        if (bw->parsed())
            return run_bw(bw_group, bw_gens, bw_rho, bw_m, bw_file, bw_ell, bw_trunc, bw_base,
                          bw_verify, bw_verify_eps, bw_verify_R, bw_out, g);
        if (verify->parsed()) return run_verify_all(verify_out, g);
    } catch (const gaw::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const gaw::TailNotNegligibleError& e) {
        std::cerr << "tail bound: " << e.what() << "\n";
        return kExitResource;
    } catch (const gaw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
