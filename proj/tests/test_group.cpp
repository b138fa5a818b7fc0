#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "gaw/errors.hpp"
#include "gaw/group.hpp"
#include "gaw/morphism.hpp"
#include "gaw/rng.hpp"

using namespace gaw;

TEST_CASE("free abelian multiplication and inverse") {
    auto z2 = GroupSpec::free_abelian(2);
    Element a = z2.parse_element("(1,0)");
    Element b = z2.parse_element("(0,1)");
    CHECK(z2.multiply(a, b) == z2.parse_element("(1,1)"));
    CHECK(z2.inverse(z2.parse_element("(3,-1)")) == z2.parse_element("(-3,1)"));
    CHECK(z2.multiply(a, z2.inverse(a)) == z2.identity());
}

TEST_CASE("free group reduction") {
    auto f2 = GroupSpec::free_group(2);
    CHECK(f2.multiply(f2.parse_element("a"), f2.parse_element("A")) == f2.identity());
    CHECK(f2.multiply(f2.parse_element("ab"), f2.parse_element("Ba")) == f2.parse_element("aa"));
    CHECK(f2.parse_element("a^2 B") == f2.parse_element("aab^-1"));
    Element w = f2.parse_element("abA");
    CHECK(f2.multiply(w, f2.inverse(w)) == f2.identity());
    // not-reduced input text still normalizes
    CHECK(f2.parse_element("a A b") == f2.parse_element("b"));
}

TEST_CASE("heisenberg triple product rule") {
    auto h = GroupSpec::heisenberg();
    // (1,0,0)(0,1,0) = (1,1,1), hand evaluation of c + c' + a b'
    CHECK(h.multiply(h.parse_element("(1,0,0)"), h.parse_element("(0,1,0)")) ==
          h.parse_element("(1,1,1)"));
    CHECK(h.inverse(h.parse_element("(1,0,0)")) == h.parse_element("(-1,0,0)"));
    // (a,b,c)^-1 = (-a,-b,-c+ab)
    Element g = h.parse_element("(2,3,5)");
    CHECK(h.inverse(g) == h.parse_element("(-2,-3,1)"));
    CHECK(h.multiply(g, h.inverse(g)) == h.identity());
    // commutator x y x^-1 y^-1 = central element (0,0,1)
    Element x = h.parse_element("(1,0,0)"), y = h.parse_element("(0,1,0)");
    Element z = h.multiply(h.multiply(x, y), h.multiply(h.inverse(x), h.inverse(y)));
    CHECK(z == h.parse_element("(0,0,1)"));
    CHECK(h.multiply(z, g) == h.multiply(g, z));
}

TEST_CASE("cyclic arithmetic") {
    auto c5 = GroupSpec::cyclic(5);
    CHECK(c5.inverse(c5.parse_element("2")) == c5.parse_element("3"));
    CHECK(c5.multiply(c5.parse_element("3"), c5.parse_element("4")) == c5.parse_element("2"));
    CHECK(c5.power(c5.parse_element("1"), 5) == c5.identity());
}

TEST_CASE("direct product componentwise") {
    auto p = GroupSpec::direct_product({GroupSpec::free_abelian(1), GroupSpec::free_group(2)});
    Element g = p.parse_element("(2; ab)");
    Element h = p.parse_element("(-1; B)");
    CHECK(p.multiply(g, h) == p.parse_element("(1; a)"));
    CHECK(p.multiply(g, p.inverse(g)) == p.identity());
    CHECK(p.generators().size() == 6);
}

TEST_CASE("associativity on random triples") {
    auto h = GroupSpec::heisenberg();
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        Element a = Element::heis(rng.uniform_int(-5, 5), rng.uniform_int(-5, 5), rng.uniform_int(-5, 5));
        Element b = Element::heis(rng.uniform_int(-5, 5), rng.uniform_int(-5, 5), rng.uniform_int(-5, 5));
        Element c = Element::heis(rng.uniform_int(-5, 5), rng.uniform_int(-5, 5), rng.uniform_int(-5, 5));
        CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
    }
}

TEST_CASE("family mismatch is rejected") {
    auto z2 = GroupSpec::free_abelian(2);
    CHECK_THROWS_AS(z2.multiply(Element::residue(1), z2.identity()), FamilyMismatchError);
    CHECK_THROWS_AS(z2.require_conforms(Element::vec({1, 2, 3})), FamilyMismatchError);
    auto f2 = GroupSpec::free_group(2);
    CHECK_THROWS_AS(f2.require_conforms(Element::word({1, -1})), FamilyMismatchError);  // not reduced
    CHECK_THROWS_AS(f2.require_conforms(Element::word({3})), FamilyMismatchError);      // out of rank
    auto c5 = GroupSpec::cyclic(5);
    CHECK_THROWS_AS(c5.require_conforms(Element::residue(7)), FamilyMismatchError);
}

TEST_CASE("custom generator sets close under inversion") {
    auto z2 = GroupSpec::free_abelian(2);
    auto ext = z2.with_generators({z2.parse_element("(1,0)"), z2.parse_element("(0,1)"),
                                   z2.parse_element("(1,1)")});
    CHECK(ext.generators().size() == 6);
    CHECK_FALSE(ext.has_default_generators());
    CHECK_FALSE(ext.closed_form_length(z2.parse_element("(1,1)")).has_value());
    CHECK_THROWS_AS(z2.with_generators({z2.identity()}), ParseError);
}

TEST_CASE("closed form lengths match defaults") {
    auto z2 = GroupSpec::free_abelian(2);
    CHECK(z2.closed_form_length(z2.parse_element("(3,-4)")) == 7);
    auto f2 = GroupSpec::free_group(2);
    CHECK(f2.closed_form_length(f2.parse_element("abA")) == 3);
    auto c7 = GroupSpec::cyclic(7);
    CHECK(c7.closed_form_length(c7.parse_element("5")) == 2);
    auto p = GroupSpec::direct_product({GroupSpec::free_abelian(1), GroupSpec::cyclic(7)});
    CHECK(p.closed_form_length(p.parse_element("(-3; 6)")) == 4);
    CHECK_FALSE(GroupSpec::heisenberg().closed_form_length(Element::heis(0, 0, 1)).has_value());
}

TEST_CASE("element text round trips") {
    auto f2 = GroupSpec::free_group(2);
    for (const char* w : {"1", "a", "abA", "aaBB"}) {
        Element e = f2.parse_element(w);
        CHECK(f2.parse_element(f2.element_to_string(e)) == e);
    }
    auto h = GroupSpec::heisenberg();
    Element g = h.parse_element("(-2,5,-11)");
    CHECK(h.parse_element(h.element_to_string(g)) == g);
    auto p = GroupSpec::direct_product({GroupSpec::free_abelian(2), GroupSpec::free_group(1)});
    Element t = p.parse_element("((1,-2); aaa)");
    CHECK(p.parse_element(p.element_to_string(t)) == t);
}

TEST_CASE("bracketed word form covers large ranks") {
    auto f30 = GroupSpec::free_group(30);
    Element e = f30.parse_element("[1 -29 30]");
    CHECK(f30.element_to_string(e) == "[1 -29 30]");
    CHECK(f30.parse_element(f30.element_to_string(e)) == e);
    CHECK(f30.parse_element("[5 -5]") == f30.identity());
    CHECK_THROWS_AS(f30.parse_element("[31]"), ParseError);
    CHECK_THROWS_AS(f30.parse_element("abc"), ParseError);
    // the bracketed form also parses for small ranks
    auto f2 = GroupSpec::free_group(2);
    CHECK(f2.parse_element("[1 2 -1]") == f2.parse_element("abA"));
}

TEST_CASE("abelianization morphism") {
    auto f2 = std::make_shared<GroupSpec>(GroupSpec::free_group(2));
    auto z2 = std::make_shared<GroupSpec>(GroupSpec::free_abelian(2));
    GroupMorphism ab(f2, z2, {z2->parse_element("(1,0)"), z2->parse_element("(0,1)")});
    CHECK(ab.apply(f2->parse_element("abAB")) == z2->identity());
    CHECK(ab.apply(f2->parse_element("aab")) == z2->parse_element("(2,1)"));

    AlgebraElement a(f2);
    a.add_term(f2->parse_element("a"), Coeff(1, 0));
    a.add_term(f2->parse_element("b"), Coeff(1, 0));
    AlgebraElement img = push_forward(ab, a);
    CHECK(img.at(z2->parse_element("(1,0)")) == Coeff(1, 0));
    CHECK(img.at(z2->parse_element("(0,1)")) == Coeff(1, 0));

    // the commutator dies and coefficients at a common image accumulate
    AlgebraElement b(f2);
    b.add_term(f2->parse_element("abAB"), Coeff(2, 0));
    b.add_term(f2->identity(), Coeff(3, 0));
    AlgebraElement imgb = push_forward(ab, b);
    CHECK(imgb.support_size() == 1);
    CHECK(imgb.at(z2->identity()) == Coeff(5, 0));
}

TEST_CASE("identity morphism is neutral") {
    auto h = std::make_shared<GroupSpec>(GroupSpec::heisenberg());
    GroupMorphism id = GroupMorphism::identity(h);
    Element g = h->parse_element("(2,-1,4)");
    CHECK(id.apply(g) == g);
    AlgebraElement a(h);
    a.add_term(g, Coeff(0.5, -1.0));
    CHECK(push_forward(id, a) == a);
}

TEST_CASE("relation violations are caught") {
    auto z2 = std::make_shared<GroupSpec>(GroupSpec::free_abelian(2));
    auto f2 = std::make_shared<GroupSpec>(GroupSpec::free_group(2));
    // images of commuting generators must commute
    CHECK_THROWS_AS(GroupMorphism(z2, f2, {f2->parse_element("a"), f2->parse_element("b")}),
                    RelationViolationError);
    auto c4 = std::make_shared<GroupSpec>(GroupSpec::cyclic(4));
    auto c6 = std::make_shared<GroupSpec>(GroupSpec::cyclic(6));
    // 1 has order 6, not dividing 4
    CHECK_THROWS_AS(GroupMorphism(c4, c6, {c6->parse_element("1")}), RelationViolationError);
    CHECK_NOTHROW(GroupMorphism(c4, c6, {c6->parse_element("3")}));  // order 2 divides 4
    // Heisenberg to abelian target: commutator dies, relations hold
    auto z1 = std::make_shared<GroupSpec>(GroupSpec::free_abelian(1));
    auto heis = std::make_shared<GroupSpec>(GroupSpec::heisenberg());
    GroupMorphism proj(heis, z1, {z1->parse_element("1"), z1->parse_element("0")});
    CHECK(proj.apply(heis->parse_element("(2,3,7)")) == z1->parse_element("2"));
}

TEST_CASE("cyclic morphism respects residues") {
    auto c6 = std::make_shared<GroupSpec>(GroupSpec::cyclic(6));
    auto c3 = std::make_shared<GroupSpec>(GroupSpec::cyclic(3));
    GroupMorphism red(c6, c3, {c3->parse_element("1")});
    CHECK(red.apply(c6->parse_element("4")) == c3->parse_element("1"));
    CHECK(red.apply(c6->parse_element("3")) == c3->identity());
}
