#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gaw/ball.hpp"
#include "gaw/bw.hpp"
#include "gaw/errors.hpp"
#include "gaw/norms.hpp"
#include "gaw/rng.hpp"

using namespace gaw;
using doctest::Approx;

namespace {

BWConfig cfg_at(double rho, int m, std::uint64_t ell, Element k, int trunc) {
    BWConfig c;
    c.rho = rho;
    c.depth = m;
    c.index = ell;
    c.base_point = std::move(k);
    c.truncation_radius = trunc;
    return c;
}

}  // namespace

TEST_CASE("scaling function") {
    auto z = GroupSpec::free_abelian(1);
    auto table = enumerate_ball(z, 8);
    CHECK(scaling_log(table, z.identity(), 1.0) == Approx(0.0));
    CHECK(scaling_log(table, z.parse_element("3"), 2.0) == Approx(2.0 * std::log(6.0)));
    // c(g) = c(g^-1) through the length symmetry
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const Element& g = table.element(rng.uniform_int(0, table.size() - 1));
        CHECK(scaling_log(table, g, 1.5) == Approx(scaling_log(table, z.inverse(g), 1.5)));
    }
}

TEST_CASE("level one at the unit is exactly one") {
    for (auto spec : {GroupSpec::free_abelian(1), GroupSpec::free_group(2)}) {
        auto spec_ptr = std::make_shared<GroupSpec>(spec);
        auto table = enumerate_ball(spec, spec.closed_form_length(spec.identity()) ? 8 : 16);
        auto unit = AlgebraElement::unit(spec_ptr);
        auto levels = compute_bw_levels(unit, 1.0, 1, 0, 8, table);
        for (std::size_t k = 0; k < levels.ball_size; ++k) CHECK(levels.log_h[k] == 0.0);
        CHECK(levels.tail_fraction == 0.0);
    }
}

TEST_CASE("level zero is the scaled coefficient table") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 8);
    auto unit = AlgebraElement::unit(z);
    // h_{0,0,g}(e_e) = delta_{g,e}
    auto levels = compute_bw_levels(unit, 1.0, 0, 0, 8, table);
    for (std::size_t k = 0; k < levels.ball_size; ++k) {
        if (table.element(k) == z->identity())
            CHECK(levels.log_h[k] == 0.0);
        else
            CHECK(std::isinf(levels.log_h[k]));
    }
    // ||e_g||_{0,0,g} = c(g)
    Element g = z->parse_element("4");
    auto eg = AlgebraElement::basis(z, g);
    auto v = bw_seminorm(eg, cfg_at(2.0, 0, 0, g, 8), table);
    CHECK(v.value.log() == Approx(2.0 * std::lgamma(5.0)));
}

TEST_CASE("odd indices evaluate at the inverse") {
    auto f2 = std::make_shared<GroupSpec>(GroupSpec::free_group(2));
    auto table = enumerate_ball(*f2, 8);
    Rng rng(11);
    auto a = random_sparse_element(table, rng, 5, 2);
    auto even = compute_bw_levels(a, 0.8, 2, 2, 4, table);
    auto odd = compute_bw_levels(a, 0.8, 2, 3, 4, table);
    for (std::size_t k = 0; k < even.ball_size; ++k)
        CHECK(odd.log_h[k] == even.log_h[table.inverse_index(k)]);
    // and the composed rule: any index reduces to an even one at k or k^-1
    auto lvl1 = compute_bw_levels(a, 0.8, 2, 1, 4, table);
    auto lvl0 = compute_bw_levels(a, 0.8, 2, 0, 4, table);
    for (std::size_t k = 0; k < even.ball_size; ++k)
        CHECK(lvl1.log_h[k] == lvl0.log_h[table.inverse_index(k)]);
}

TEST_CASE("h values are nonnegative and vanish on zero") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 10);
    AlgebraElement zero(z);
    auto levels = compute_bw_levels(zero, 1.0, 2, 0, 10, table);
    for (std::size_t k = 0; k < levels.ball_size; ++k) CHECK(std::isinf(levels.log_h[k]));
    Rng rng(3);
    auto a = random_sparse_element(table, rng, 4, 3);
    auto lv = compute_bw_levels(a, 1.0, 2, 0, 10, table);
    for (std::size_t k = 0; k < lv.ball_size; ++k) CHECK_FALSE(std::isnan(lv.log_h[k]));
}

TEST_CASE("homogeneity of the seminorms") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 12);
    Rng rng(5);
    for (int m : {0, 1, 2}) {
        auto a = random_sparse_element(table, rng, 5, 4);
        auto scaled = a.scaled(Coeff(2.0, 0.0));
        // depth 0 only sees the coefficient at the base point itself
        Element base = m == 0 ? a.coefficients().begin()->first : z->identity();
        auto va = bw_seminorm(a, cfg_at(1.0, m, 0, base, 12), table);
        auto vs = bw_seminorm(scaled, cfg_at(1.0, m, 0, base, 12), table);
        CHECK(vs.value.log() == Approx(va.value.log() + std::log(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("triangle inequality spot checks") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 12);
    Rng rng(29);
    for (int m : {1, 2}) {
        for (int t = 0; t < 20; ++t) {
            auto a = random_sparse_element(table, rng, 4, 4);
            auto b = random_sparse_element(table, rng, 4, 4);
            auto cfg = cfg_at(1.0, m, 0, z->identity(), 12);
            double na = bw_seminorm(a, cfg, table).value.log();
            double nb = bw_seminorm(b, cfg, table).value.log();
            double nab = bw_seminorm(a + b, cfg, table).value.log();
            CHECK(nab <= log_add(na, nb) + 1e-9);
        }
    }
}

TEST_CASE("parallel levels match the serial reference exactly") {
    auto f2 = std::make_shared<GroupSpec>(GroupSpec::free_group(2));
    auto table = enumerate_ball(*f2, 8);
    Rng rng(13);
    auto a = random_sparse_element(table, rng, 6, 2);
    auto par = compute_bw_levels(a, 0.7, 3, 5, 4, table, true);
    auto ser = compute_bw_levels(a, 0.7, 3, 5, 4, table, false);
    CHECK(par.log_h == ser.log_h);
    CHECK(par.tail_fraction == ser.tail_fraction);
}

TEST_CASE("table-backed lengths drive the recursion where no formula exists") {
    // Heisenberg has no closed-form word length; the level sums look up
    // products in a table of twice the truncation radius
    auto heis = std::make_shared<GroupSpec>(GroupSpec::heisenberg());
    auto table = enumerate_ball(*heis, 6);
    auto unit = AlgebraElement::unit(heis);
    auto lev = compute_bw_levels(unit, 1.0, 1, 0, 3, table);
    for (std::size_t k = 0; k < lev.ball_size; ++k) CHECK(lev.log_h[k] == 0.0);
    Rng rng(9);
    auto a = random_sparse_element(table, rng, 4, 1);
    auto l2 = compute_bw_levels(a, 1.0, 2, 0, 3, table);
    auto l2s = compute_bw_levels(a, 1.0, 2, 0, 3, table, false);
    CHECK(l2.log_h == l2s.log_h);
    // a truncation radius beyond half the table cannot resolve the products
    auto b = random_sparse_element(table, rng, 3, 4);
    CHECK_THROWS_AS(compute_bw_levels(b, 1.0, 2, 0, 5, table), OutOfBallError);
}

TEST_CASE("levels are independent of the thread count") {
#ifdef _OPENMP
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 40);
    Rng rng(10);
    auto a = random_sparse_element(table, rng, 5, 4);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto one = compute_bw_levels(a, 1.0, 2, 0, 40, table);
    omp_set_num_threads(4);
    auto four = compute_bw_levels(a, 1.0, 2, 0, 40, table);
    omp_set_num_threads(saved);
    CHECK(one.log_h == four.log_h);
    CHECK(one.tail_fractions == four.tail_fractions);
#endif
}

TEST_CASE("tail accounting") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 16);
    Rng rng(17);
    auto a = random_sparse_element(table, rng, 4, 3);
    // healthy truncation: factorial decay crushes the tail
    auto good = h_value(a, cfg_at(1.0, 2, 0, z->identity(), 16), table);
    CHECK(good.tail_fraction < 1e-6);
    // a slow scaling with a tight ball leaves a visible tail
    BWConfig tight = cfg_at(0.25, 2, 0, z->identity(), 4);
    CHECK_THROWS_AS(h_value(a, tight, table), TailNotNegligibleError);
    tight.tail_fraction_limit = std::numeric_limits<double>::infinity();
    CHECK_NOTHROW(h_value(a, tight, table));
}

TEST_CASE("comparison estimates hold with stable constants") {
    auto z = GroupSpec::free_abelian(1);
    auto table = enumerate_ball(z, 16);
    ComparisonParams params;
    params.truncation_radius = 16;
    params.support_radius = 4;
    params.sample_count = 32;
    for (double rho : {0.5, 1.0, 2.0}) {
        for (int m : {1, 2, 3}) {
            // the norm estimate needs R < rho (1 - 2^-m)
            double R = 0.4 * rho * (1.0 - std::pow(0.5, m));
            auto rep = verify_comparison(rho, m, 0.9 * rho / std::pow(4.0, m), R, table, params);
            INFO("rho = " << rho << ", m = " << m);
            CHECK(rep.pointwise_violations == 0);
            CHECK(rep.norm_constant_stable);
            CHECK(rep.h_constant_stable);
            CHECK(rep.holds);
        }
    }
}

TEST_CASE("comparison preconditions") {
    auto z = GroupSpec::free_abelian(1);
    auto table = enumerate_ball(z, 12);
    ComparisonParams params;
    params.truncation_radius = 12;
    CHECK_THROWS_AS(verify_comparison(1.0, 2, 0.5, 0.5, table, params), ParseError);   // eps cap
    CHECK_THROWS_AS(verify_comparison(1.0, 2, 0.05, 1.5, table, params), ParseError);  // R < rho
    CHECK_THROWS_AS(verify_comparison(1.0, 0, 0.05, 0.5, table, params), ParseError);  // m >= 1
    CHECK_THROWS_AS(compute_bw_levels(AlgebraElement::unit(std::make_shared<GroupSpec>(z)), 1.0, 2,
                                      4, 12, table),
                    ParseError);  // index out of range
}

TEST_CASE("support must fit inside the truncation ball") {
    auto z = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto table = enumerate_ball(*z, 10);
    auto a = AlgebraElement::basis(z, z->parse_element("9"));
    CHECK_THROWS_AS(compute_bw_levels(a, 1.0, 1, 0, 4, table), OutOfBallError);
}
