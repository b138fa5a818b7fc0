#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gaw/ball.hpp"
#include "gaw/errors.hpp"
#include "gaw/io.hpp"
#include "gaw/rng.hpp"

using namespace gaw;

namespace {

std::filesystem::path tmp_dir() {
    auto p = std::filesystem::temp_directory_path() / "gaw_io_tests";
    std::filesystem::create_directories(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("group spec parsing") {
    CHECK(parse_group("z").family_string() == "abelian(1)");
    CHECK(parse_group("z3").family_string() == "abelian(3)");
    CHECK(parse_group("f2").family_string() == "free(2)");
    CHECK(parse_group("c12").family_string() == "cyclic(12)");
    CHECK(parse_group("heis").family_string() == "heisenberg");
    CHECK(parse_group("prod(z2,f2)").family_string() == "prod(abelian(2),free(2))");
    CHECK(parse_group("prod(prod(z,z),c3)").family_string() == "prod(prod(abelian(1),abelian(1)),cyclic(3))");
    CHECK(parse_group("free(4)").family_string() == "free(4)");
    CHECK_THROWS_AS(parse_group("zz"), ParseError);
    CHECK_THROWS_AS(parse_group("c1"), ParseError);
    CHECK_THROWS_AS(parse_group(""), ParseError);
    // generator override
    auto ext = parse_group("z2", "(1,0); (0,1); (1,1)");
    CHECK_FALSE(ext.has_default_generators());
    CHECK(ext.generators().size() == 6);
}

TEST_CASE("element file round trip") {
    auto dir = tmp_dir();
    auto spec = std::make_shared<GroupSpec>(parse_group("f2"));
    auto table = enumerate_ball(*spec, 6);
    Rng rng(5);
    auto a = random_sparse_element(table, rng, 12, 5);
    auto path = dir / "elem_roundtrip.txt";
    write_element_file(a, path);
    auto back = read_element_file(spec, path);
    CHECK(back == a);
    // comments and accumulation
    auto path2 = dir / "elem_manual.txt";
    {
        std::ofstream out(path2);
        out << "# hand written\n";
        out << "1 0 ab\n";
        out << "0.5 -1 ab\n";
        out << "2 0 1\n";
    }
    auto b = read_element_file(spec, path2);
    CHECK(b.support_size() == 2);
    CHECK(b.at(spec->parse_element("ab")) == Coeff(1.5, -1.0));
    CHECK(b.at(spec->identity()) == Coeff(2.0, 0.0));
    CHECK_THROWS_AS(read_element_file(spec, dir / "missing.txt"), ParseError);
}

TEST_CASE("ball cache round trip is byte-stable") {
    auto dir = tmp_dir();
    auto spec = parse_group("heis");
    auto table = enumerate_ball(spec, 6);
    auto path = dir / "heis6.cache";
    write_ball_cache(table, path);
    auto back = read_ball_cache(spec, path);
    CHECK(back.same_table(table));
    auto path2 = dir / "heis6b.cache";
    write_ball_cache(back, path2);
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("cache integrity checks") {
    auto dir = tmp_dir();
    auto spec = parse_group("z2");
    auto table = enumerate_ball(spec, 4);
    auto path = dir / "z2.cache";
    write_ball_cache(table, path);
    // wrong group
    CHECK_THROWS_AS(read_ball_cache(parse_group("z3"), path), CacheError);
    // tampered hash
    {
        std::string text = slurp(path);
        auto pos = text.find("hash ");
        text[pos + 6] = text[pos + 6] == '0' ? '1' : '0';
        std::ofstream out(path);
        out << text;
    }
    CHECK_THROWS_AS(read_ball_cache(spec, path), CacheError);
    // reordered rows
    write_ball_cache(table, path);
    {
        std::string text = slurp(path);
        std::ofstream out(path);
        out << text;
        out << "(9,9)\t1\n";  // stray row out of shell order
    }
    CHECK_THROWS_AS(read_ball_cache(spec, path), CacheError);
}

TEST_CASE("sigma beta csv") {
    auto dir = tmp_dir();
    auto table = enumerate_ball(parse_group("z"), 3);
    auto path = dir / "z.csv";
    write_sigma_beta_csv(table, path);
    CHECK(slurp(path) == "n,sigma,beta\n0,1,1\n1,2,3\n2,2,5\n3,2,7\n");
    write_series_csv({0.5, 1.25}, "log_partial_sum", dir / "series.csv");
    CHECK(slurp(dir / "series.csv") == "n,log_partial_sum\n0,0.5\n1,1.25\n");
}

TEST_CASE("fnv hash is stable and spreads") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("abelian(1)|gens:-1,1") == fnv1a64("abelian(1)|gens:-1,1"));
    CHECK(fnv1a64("a") != fnv1a64("b"));
}

TEST_CASE("canonical strings distinguish generator sets") {
    auto z2 = parse_group("z2");
    auto ext = parse_group("z2", "(1,0);(0,1);(1,1)");
    CHECK(z2.canonical_string() != ext.canonical_string());
    CHECK(z2 == parse_group("abelian(2)"));
    CHECK_FALSE(z2 == ext);
}
