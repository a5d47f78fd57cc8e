#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genera/bordism.hpp"
#include "genera/rng.hpp"

using namespace genera;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

MultSeq<Rational> builtin_table(BuiltinGenus g, int max_weight) {
    GenusSpec spec;
    spec.builtin = g;
    return resolve_genus<Rational>(spec, 2 * max_weight + 2, max_weight).ms;
}

BordismElement random_element(Rng& rng, int weight) {
    BordismElement e = BordismElement::zero(4 * weight);
    for (const Partition& p : partitions_of(weight)) {
        // generator monomial indices are the doubled parts: CP^{2k} per part k
        std::vector<int> doubled;
        for (int part : p.parts()) doubled.push_back(2 * part);
        e.add_term(Partition(doubled), Rational(rng.range(-9, 9), rng.range(1, 9)));
    }
    return e;
}

}  // namespace

TEST_CASE("cpn characters") {
    auto cp2 = cpn_character(2, Variables::pontryagin);
    CHECK(cp2.dimension == 4);
    REQUIRE(cp2.numbers.size() == 1);
    CHECK(cp2.number(P({1})) == Rational(3));

    auto cp4 = cpn_character(4, Variables::pontryagin);
    CHECK(cp4.number(P({2})) == Rational(10));
    CHECK(cp4.number(P({1, 1})) == Rational(25));

    auto cp1 = cpn_character(1, Variables::chern);
    CHECK(cp1.number(P({1})) == Rational(2));

    auto cp3 = cpn_character(3, Variables::pontryagin);  // dim 6: zero map
    CHECK(cp3.numbers.empty());
    CHECK(cp3.weight() == -1);

    CHECK_THROWS_AS(cpn_character(0, Variables::pontryagin), usage_error);
}

TEST_CASE("character products") {
    auto cp2 = cpn_character(2, Variables::pontryagin);
    auto prod = character_product(cp2, cp2);
    CHECK(prod.dimension == 8);
    CHECK(prod.number(P({2})) == Rational(9));
    CHECK(prod.number(P({1, 1})) == Rational(18));

    auto with_pt = character_product(prod, point_character(Variables::pontryagin));
    CHECK(with_pt == prod);

    auto mixed = character_product(cp2, cpn_character(4, Variables::pontryagin));
    CHECK(mixed.dimension == 12);
    for (const auto& [j, v] : mixed.numbers) CHECK(j.weight() == 3);

    CHECK_THROWS_AS(character_product(cp2, cpn_character(1, Variables::chern)), usage_error);
}

TEST_CASE("element characters and equality") {
    auto e_cp4 = BordismElement::generator(4);
    CHECK(element_character(e_cp4) == cpn_character(4, Variables::pontryagin));

    // 3[CP^2]^2 - 2[CP^4]
    BordismElement mix = BordismElement::zero(8);
    mix.add_term(P({2, 2}), Rational(3));
    mix.add_term(P({4}), Rational(-2));
    auto c = element_character(mix);
    CHECK(c.number(P({2})) == Rational(7));
    CHECK(c.number(P({1, 1})) == Rational(4));

    CHECK(element_character(BordismElement::zero(8)).numbers.empty());

    BordismElement sq = element_mul(BordismElement::generator(2), BordismElement::generator(2));
    CHECK(elements_equal(sq, sq));
    CHECK_FALSE(elements_equal(sq, e_cp4));
    CHECK_FALSE(elements_equal(sq, BordismElement::zero(12)));
}

TEST_CASE("generator basis expression") {
    auto c4 = cpn_character(4, Variables::pontryagin);
    auto expr = express_in_generator_basis(c4);
    REQUIRE(expr.size() == 1);
    CHECK(expr.at(P({4})) == Rational(1));

    // quaternionic projective plane fixture, supplied by its numbers
    Character hp2;
    hp2.dimension = 8;
    hp2.variables = Variables::pontryagin;
    hp2.numbers.emplace(P({2}), Rational(7));
    hp2.numbers.emplace(P({1, 1}), Rational(4));
    auto hp_expr = express_in_generator_basis(hp2);
    CHECK(hp_expr.at(P({2, 2})) == Rational(3));
    CHECK(hp_expr.at(P({4})) == Rational(-2));

    // a_hat vanishes on it, directly and through the expression
    auto A = builtin_table(BuiltinGenus::a_hat, 2);
    CHECK(genus_eval(A, hp2) == Rational(0));
    BordismElement as_element = BordismElement::zero(8);
    for (const auto& [mono, c] : hp_expr) as_element.add_term(mono, c);
    CHECK(genus_eval(A, as_element) == Rational(0));

    CHECK(matrix_determinant(generator_character_matrix(8)) == Rational(-45));
    for (int d = 4; d <= 16; d += 4)
        CHECK_FALSE(matrix_determinant(generator_character_matrix(d)).is_zero());

    CHECK_THROWS_AS(express_in_generator_basis(cpn_character(1, Variables::chern)), usage_error);
}

TEST_CASE("express_in_generator_basis inverts element_character") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int w = 1 + static_cast<int>(rng.below(4));
        BordismElement e = random_element(rng, w);
        auto back = express_in_generator_basis(element_character(e));
        CHECK(back == e.terms);
    }
}

TEST_CASE("elements_equal agrees with normal forms") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int w = 1 + static_cast<int>(rng.below(4));
        BordismElement a = random_element(rng, w);
        BordismElement b = rng.below(2) ? a : random_element(rng, w);
        CHECK(elements_equal(a, b) == (a.terms == b.terms));
    }
}

TEST_CASE("genus evaluation on characters") {
    auto L = builtin_table(BuiltinGenus::signature, 4);
    CHECK(genus_eval(L, cpn_character(2, Variables::pontryagin)) == Rational(1));
    auto cp2sq = character_product(cpn_character(2, Variables::pontryagin),
                                   cpn_character(2, Variables::pontryagin));
    CHECK(genus_eval(L, cp2sq) == Rational(1));

    auto A = builtin_table(BuiltinGenus::a_hat, 4);
    CHECK(genus_eval(A, cpn_character(2, Variables::pontryagin)) == Rational(-1, 8));
    CHECK(genus_eval(A, cpn_character(4, Variables::pontryagin)) == Rational(3, 128));

    auto T = builtin_table(BuiltinGenus::todd, 4);
    CHECK(genus_eval(T, cpn_character(3, Variables::chern)) == Rational(1));

    // zero map in a dimension not divisible by 4
    CHECK(genus_eval(L, cpn_character(3, Variables::pontryagin)) == Rational(0));

    MultSeq<Rational> shallow = builtin_table(BuiltinGenus::signature, 1);
    CHECK_THROWS_AS(genus_eval(shallow, cpn_character(4, Variables::pontryagin)), usage_error);
}

TEST_CASE("genus is a ring homomorphism on random elements") {
    Rng rng(41);
    std::vector<MultSeq<Rational>> genera = {
        builtin_table(BuiltinGenus::signature, 8),
        builtin_table(BuiltinGenus::a_hat, 8),
        builtin_table(BuiltinGenus::trivial, 8),
    };
    for (int trial = 0; trial < 25; ++trial) {
        int wa = 1 + static_cast<int>(rng.below(4));
        int wb = 1 + static_cast<int>(rng.below(4));
        BordismElement a = random_element(rng, wa);
        BordismElement b = random_element(rng, wb);
        BordismElement ab = element_mul(a, b);
        BordismElement a2 = random_element(rng, wa);
        for (const auto& ms : genera) {
            CHECK(genus_eval(ms, ab) == genus_eval(ms, a) * genus_eval(ms, b));
            CHECK(genus_eval(ms, element_add(a, a2)) ==
                  genus_eval(ms, a) + genus_eval(ms, a2));
        }
    }
}

TEST_CASE("element expression parsing") {
    BordismElement e = parse_element_expr("3*CP2^2 - 2*CP4");
    CHECK(e.degree == 8);
    CHECK(e.terms.at(P({2, 2})) == Rational(3));
    CHECK(e.terms.at(P({4})) == Rational(-2));

    CHECK(parse_element_expr("  CP2 * CP2  ") == parse_element_expr("CP2^2"));
    CHECK(parse_element_expr("1/2*CP6").terms.at(P({6})) == Rational(1, 2));
    CHECK(parse_element_expr("-CP2 + 2*CP2").terms.at(P({2})) == Rational(1));
    CHECK(parse_element_expr("CP2 - CP2").is_zero());

    CHECK(render_element(e) == "3*CP2^2 - 2*CP4");
    CHECK(render_element(parse_element_expr("CP4")) == "CP4");
    CHECK(render_element(BordismElement::zero(4)) == "0");

    try {
        parse_element_expr("CP2 + CP4");
        FAIL("inhomogeneous expression accepted");
    } catch (const usage_error& err) {
        CHECK(std::string(err.what()).find("inhomogeneous") != std::string::npos);
    }
    try {
        parse_element_expr("3**CP2");
        FAIL("double star accepted");
    } catch (const usage_error& err) {
        CHECK(std::string(err.what()).find("position") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_element_expr(""), usage_error);
    CHECK_THROWS_AS(parse_element_expr("CPx"), usage_error);
    CHECK_THROWS_AS(parse_element_expr("CP2 CP2"), usage_error);
}
