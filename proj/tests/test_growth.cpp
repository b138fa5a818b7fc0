#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaw/errors.hpp"
#include "gaw/growth.hpp"
#include "gaw/logvalue.hpp"

using namespace gaw;
using doctest::Approx;

TEST_CASE("log evaluation of the catalog") {
    auto lin = parse_growth("poly(1,1)");
    CHECK(lin.log_at(0) == Approx(0.0));
    CHECK(lin.log_at(4) == Approx(std::log(5.0)));
    auto fact = parse_growth("factorial");
    CHECK(fact.log_at(5) == Approx(std::log(120.0)));
    CHECK(fact.log_at(0) == Approx(0.0));
    auto e1 = parse_growth("subexp(1)");
    CHECK(e1.log_at(3) == Approx(3.0));
    auto sf = parse_growth("subfact(0.5)");
    CHECK(sf.log_at(9) == Approx(std::lgamma(4.0)));  // (9^0.5)! = 3! = 6
    auto pw = parse_growth("pow(poly(1,1),2)");
    CHECK(pw.log_at(4) == Approx(2.0 * std::log(5.0)));
    auto pr = parse_growth("prod(poly(1,1),subexp(1))");
    CHECK(pr.log_at(2) == Approx(std::log(3.0) + 2.0));
    auto sm = parse_growth("sum(2,poly(1,1),1,subexp(0.5))");
    CHECK(sm.log_at(4) == Approx(std::log(2.0 * 5.0 + std::exp(2.0))));
}

TEST_CASE("polynomial constant term is raised to one") {
    auto p = parse_growth("poly(0,3,0,1)");  // 3n + n^3, constant coerced to 1
    CHECK(p.log_at(0) == Approx(0.0));
    CHECK(p.log_at(2) == Approx(std::log(1.0 + 6.0 + 8.0)));
}

TEST_CASE("catalog functions are monotone") {
    for (const char* text : {"poly(1,1)", "poly(1,0,2)", "subexp(0.5)", "subexp(1)", "factorial",
                             "subfact(0.3)", "subfact(1)", "pow(subexp(0.5),3)",
                             "prod(poly(1,1),factorial)", "sum(1,poly(1,1),2,subfact(0.5))"}) {
        auto f = parse_growth(text);
        double prev = f.log_at(0);
        CHECK(prev >= 0.0);
        for (int n = 1; n <= 10000; ++n) {
            double cur = f.log_at(n);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("submultiplicativity verdicts") {
    CHECK(check_submultiplicative(parse_growth("poly(1,1)"), 50).holds);
    CHECK(check_submultiplicative(parse_growth("subexp(0.5)"), 50).holds);
    CHECK(check_submultiplicative(parse_growth("subexp(1)"), 50).holds);
    auto v = check_submultiplicative(parse_growth("factorial"), 10);
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->first == 1);
    CHECK(v.counterexample->second == 1);
    CHECK_FALSE(check_submultiplicative(parse_growth("subfact(0.5)"), 60).holds);
}

TEST_CASE("almost submultiplicative constant for the factorial") {
    auto fact = parse_growth("factorial");
    double c30 = fit_almost_submultiplicative(fact, 1.0, 30);
    // sweep oracle: max over n+m <= 30 of (n+m)!/(n!^2 m!^2)
    double best = 0.0;
    for (int n = 0; n <= 30; ++n)
        for (int m = 0; n + m <= 30; ++m) {
            double v = std::lgamma(n + m + 1.0) - 2.0 * std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0);
            best = std::max(best, v);
        }
    CHECK(c30 == Approx(std::exp(best)));
    CHECK(c30 == Approx(2.0));
    // stabilizes under range doubling
    CHECK(fit_almost_submultiplicative(fact, 0.5, 60) ==
          Approx(fit_almost_submultiplicative(fact, 0.5, 30)));
    CHECK(fit_almost_submultiplicative(fact, 0.25, 80) ==
          Approx(fit_almost_submultiplicative(fact, 0.25, 40)));
    // already submultiplicative functions fit c = 1
    CHECK(fit_almost_submultiplicative(parse_growth("poly(1,1)"), 0.1, 50) == Approx(1.0));
}

TEST_CASE("witness search") {
    auto lin = parse_growth("poly(1,1)");
    auto se = parse_growth("subexp(0.5)");
    auto w = search_witness(lin, se, 8, 8, 200);
    REQUIRE(w.has_value());
    CHECK(check_precedes(lin, se, w->c, w->k, 200));
    // reflexivity with the smallest witness
    auto self = search_witness(se, se, 8, 8, 200);
    REQUIRE(self.has_value());
    CHECK(self->c == 1);
    CHECK(self->k == 1);
    // refutation up to caps: exp(n) is not below any polynomial
    CHECK_FALSE(search_witness(parse_growth("subexp(1)"), lin, 8, 8, 200).has_value());
    CHECK_THROWS_AS(check_precedes(lin, se, 0, 1, 10), ParseError);
}

TEST_CASE("symbolic comparison rules") {
    auto cmp = [](const char* a, const char* b) {
        return symbolic_compare(parse_growth(a), parse_growth(b));
    };
    CHECK(cmp("poly(1,1)", "poly(0,3,0,1)") == CompareResult::Equivalent);
    CHECK(cmp("subexp(0.3)", "subfact(0.3)") == CompareResult::Precedes);
    CHECK(cmp("factorial", "factorial") == CompareResult::Equivalent);
    CHECK(cmp("poly(1,1)", "subexp(0.2)") == CompareResult::Precedes);
    CHECK(cmp("subexp(0.5)", "subexp(0.2)") == CompareResult::Succeeds);
    CHECK(cmp("subfact(0.3)", "subexp(0.5)") == CompareResult::Precedes);
    CHECK(cmp("subexp(1)", "factorial") == CompareResult::Precedes);
    CHECK(cmp("pow(subexp(0.5),4)", "subexp(0.5)") == CompareResult::Equivalent);
    CHECK(cmp("prod(poly(1,1),subexp(0.5))", "subexp(0.5)") == CompareResult::Equivalent);
    CHECK(cmp("sum(1,poly(1,1),1,factorial)", "factorial") == CompareResult::Equivalent);
    CHECK(symbolic_compare(GrowthFunction::sampled({0.0, 1.0}, "x"), parse_growth("poly(1,1)")) ==
          CompareResult::Unknown);
}

TEST_CASE("symbolic verdicts are backed by witnesses") {
    const char* catalog[] = {"poly(1,1)",    "poly(0,3,0,1)", "subexp(0.3)", "subexp(0.5)",
                             "subexp(1)",    "subfact(0.3)",  "subfact(0.5)", "factorial",
                             "pow(subexp(0.5),2)", "prod(poly(1,1),subexp(0.3))"};
    for (const char* sa : catalog) {
        for (const char* sb : catalog) {
            auto a = parse_growth(sa);
            auto b = parse_growth(sb);
            auto cmp = symbolic_compare(a, b);
            if (cmp == CompareResult::Precedes || cmp == CompareResult::Equivalent) {
                INFO(sa << " should precede " << sb);
                CHECK(search_witness(a, b, 16, 16, 200).has_value());
            }
            if (cmp == CompareResult::Succeeds || cmp == CompareResult::Equivalent) {
                INFO(sb << " should precede " << sa);
                CHECK(search_witness(b, a, 16, 16, 200).has_value());
            }
        }
    }
}

TEST_CASE("linear growth below sigma forces summable inverse powers") {
    // witness (c,k) for (1+n) before sigma gives 1/sigma in l^p for p <= 2kc
    auto lin = parse_growth("poly(1,1)");
    for (const char* text : {"poly(1,1)", "poly(0,0,1)", "subexp(0.5)", "factorial"}) {
        auto sigma = parse_growth(text);
        auto w = search_witness(lin, sigma, 8, 8, 400);
        REQUIRE(w.has_value());
        double p = 2.0 * static_cast<double>(w->k * w->c);
        auto partial = [&](int upto) {
            double s = 0.0;
            for (int n = 0; n <= upto; ++n) s += std::exp(-p * sigma.log_at(n));
            return s;
        };
        double s1 = partial(500), s2 = partial(1000), s3 = partial(2000);
        double d1 = s2 - s1, d2 = s3 - s2;
        CHECK(d1 < 0.02 * s1);  // increments die out
        if (d1 > 0.0)
            CHECK(d2 < 0.6 * d1);  // and keep shrinking
        else
            CHECK(d2 == 0.0);  // fast weights already exhausted the doubles
    }
}

TEST_CASE("sampled growth functions restrict the range") {
    auto sampled = GrowthFunction::sampled({0.0, std::log(2.0), std::log(4.0)}, "test");
    CHECK(sampled.max_arg() == 2);
    CHECK_THROWS_AS(sampled.log_at(3), OutOfBallError);
    // checking against a sampled right side shrinks to arguments c*n in range
    auto w = search_witness(parse_growth("poly(1,1)"), sampled, 2, 4, 100);
    if (w) CHECK(w->checked_range <= 2);
}

TEST_CASE("log-valued arithmetic") {
    using gaw::LogValue;
    LogValue zero = LogValue::zero();
    LogValue two = LogValue::from_value(2.0);
    LogValue three = LogValue::from_value(3.0);
    CHECK(zero.is_zero());
    CHECK(LogValue::from_value(0.0).is_zero());
    // zero absorbs multiplication and is neutral for addition
    CHECK((zero * two).is_zero());
    CHECK((two * zero).is_zero());
    CHECK((zero + two) == two);
    CHECK((two + zero) == two);
    // multiplication is log addition, powers are log scaling
    CHECK((two * three).log() == Approx(std::log(6.0)));
    CHECK((two / three).log() == Approx(std::log(2.0 / 3.0)));
    CHECK(two.pow(10.0).log() == Approx(10.0 * std::log(2.0)));
    CHECK(zero.pow(3.0).is_zero());
    // addition via stable log-sum-exp survives huge magnitude gaps
    LogValue huge = LogValue::from_log(5000.0);
    LogValue tiny = LogValue::from_log(-5000.0);
    CHECK((huge + tiny).log() == Approx(5000.0));
    CHECK((two + three).log() == Approx(std::log(5.0)));
    CHECK(two < three);
    // vector log-sum-exp agrees with the naive sum in the safe range
    std::vector<double> logs{std::log(1.0), std::log(2.5), std::log(0.25)};
    CHECK(gaw::log_sum_exp(logs) == Approx(std::log(3.75)));
    // comparison helpers
    CHECK(gaw::log_close(two, LogValue::from_log(std::log(2.0) * (1 + 1e-12)), 1e-9));
    CHECK(gaw::log_leq(two, three, 1e-12));
    CHECK_FALSE(gaw::log_leq(three, two, 1e-12));
    CHECK(gaw::log_leq(zero, two, 1e-12));
    CHECK_FALSE(gaw::log_close(zero, two, 1e-9));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_growth("poly(1)"), ParseError);       // constant only, bounded
    CHECK_THROWS_AS(parse_growth("poly(1,-1)"), ParseError);    // negative coefficient
    CHECK_THROWS_AS(parse_growth("subexp(1.5)"), ParseError);   // theta out of range
    CHECK_THROWS_AS(parse_growth("subexp(0)"), ParseError);
    CHECK_THROWS_AS(parse_growth("nope(1)"), ParseError);
    CHECK_THROWS_AS(parse_growth("pow(poly(1,1),0)"), ParseError);
    CHECK_THROWS_AS(parse_growth("sum(0.5,poly(1,1),1,poly(1,1))"), ParseError);
    CHECK(parse_growth("  subfact( 0.5 ) ").to_string() == "subfact(0.5)");
}
