#include <doctest.h>

#include <random>

#include "tautring/class_parser.hpp"
#include "tautring/manifold_io.hpp"
#include "tautring/render.hpp"
#include "test_support.hpp"

using namespace tautring;
using testsupport::random_char_class;

TEST_CASE("parse_class basics") {
    CHECK(parse_class("e*p1", 2) == CharClass::euler(2) * CharClass::pontryagin(2, 1));
    CHECK(parse_class("e^2", 2) == CharClass::pontryagin(2, 2)); // normal form
    CHECK(parse_class("7*p1 - 7*e", 2) ==
          Rational(7) * CharClass::pontryagin(2, 1) - Rational(7) * CharClass::euler(2));
    CHECK(parse_class("  e * p1 ", 2) == parse_class("e*p1", 2));
    CHECK(parse_class("(p1 + e)^2", 2) ==
          (CharClass::pontryagin(2, 1) + CharClass::euler(2)).pow(2));
    CHECK(parse_class("13*(p1^2 + e^2 - 2*e*p1)", 2) ==
          Rational(13) * (CharClass::pontryagin(2, 1).pow(2) + CharClass::pontryagin(2, 2) -
                          Rational(2) * (CharClass::euler(2) * CharClass::pontryagin(2, 1))));
    CHECK(parse_class("1/2*p1", 2) == Rational(1, 2) * CharClass::pontryagin(2, 1));
    CHECK(parse_class("-e", 2) == Rational(-1) * CharClass::euler(2));
    CHECK(parse_class("3", 2) == CharClass::constant(2, Rational(3)));
}

TEST_CASE("parse_class errors carry positions") {
    CHECK_THROWS_AS(parse_class("p3", 2), ClassIndexError);
    CHECK_THROWS_AS(parse_class("e +", 2), ClassParseError);
    CHECK_THROWS_AS(parse_class("(e", 2), ClassParseError);
    CHECK_THROWS_AS(parse_class("e $ p1", 2), ClassParseError);
    CHECK_THROWS_AS(parse_class("p", 2), ClassParseError);

    try {
        parse_class("e + $", 2);
        FAIL("expected throw");
    } catch (const ClassParseError& e) {
        CHECK(e.position() == 4);
    }

    try {
        parse_class("e*p5", 3);
        FAIL("expected throw");
    } catch (const ClassIndexError& e) {
        CHECK(e.index() == 5);
        CHECK(e.position() == 2);
    }
}

TEST_CASE("print/parse roundtrip on random classes") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto c = random_char_class(rng, n, 16);
        CHECK(parse_class(c.to_string(), n) == c);
    }
}

TEST_CASE("latex rendering of generators") {
    TautGenerator kappa{TautGenerator::Kind::Kappa, ClassMonomial{1, {1, 0}}};
    CHECK(kappa.to_latex() == "\\kappa_{ep_1}");
    CHECK(kappa.to_string() == "kappa[e*p1]");

    TautGenerator point{TautGenerator::Kind::PointClass, ClassMonomial{0, {2, 0}}};
    CHECK(point.to_latex() == "p_1^2");

    TautGenerator unit_kappa{TautGenerator::Kind::Kappa, ClassMonomial{0, {0, 0}}};
    CHECK(unit_kappa.to_string() == "kappa[1]");
}

TEST_CASE("manifold json roundtrip") {
    for (const auto& M : {sphere(2), product(sphere(1), sphere(2)), projective_space(2)}) {
        auto j = manifold_to_json(M);
        auto back = manifold_from_json(j);
        CHECK(back.name == M.name);
        CHECK(back.n == M.n);
        CHECK(back.m0 == M.m0);
        CHECK(back.m1 == M.m1);
        REQUIRE(back.fixed_points.size() == M.fixed_points.size());
        for (size_t i = 0; i < M.fixed_points.size(); ++i) {
            CHECK(back.fixed_points[i].label == M.fixed_points[i].label);
            CHECK(back.fixed_points[i].rep.weights == M.fixed_points[i].rep.weights);
            CHECK(back.fixed_points[i].rep.sign == M.fixed_points[i].rep.sign);
        }
    }
}

TEST_CASE("manifold json validation") {
    auto j = manifold_to_json(sphere(2));
    j.erase("rank");
    CHECK_THROWS_AS(manifold_from_json(j), std::invalid_argument);

    auto j2 = manifold_to_json(sphere(2));
    j2["m1"] = 0; // collides with m0
    CHECK_THROWS_AS(manifold_from_json(j2), std::invalid_argument);

    auto j3 = manifold_to_json(sphere(2));
    j3["fixed_points"][0]["weights"] = {{1}};
    CHECK_THROWS_AS(manifold_from_json(j3), std::invalid_argument);

    auto j4 = manifold_to_json(sphere(2));
    j4["fixed_points"][0]["sign"] = 2;
    CHECK_THROWS_AS(manifold_from_json(j4), std::invalid_argument);
}

TEST_CASE("generator map json is deterministic") {
    auto g = connected_sum_hom(product(sphere(1), sphere(1)), 10);
    auto j1 = generator_map_to_json(g).dump(2);
    auto j2 = generator_map_to_json(connected_sum_hom(product(sphere(1), sphere(1)), 10)).dump(2);
    CHECK(j1 == j2);
    CHECK(j1.find("\"point_class_status\": \"transported\"") != std::string::npos);

    auto cp2 = generator_map_to_json(connected_sum_hom(projective_space(2), 10));
    CHECK(cp2["point_class_status"] == "unavailable");
}

TEST_CASE("generator map latex") {
    auto g = connected_sum_hom(product(sphere(1), sphere(1)), 8);
    auto tex = generator_map_to_latex(g);
    CHECK(tex.find("\\kappa_{ep_1} &\\longmapsto \\kappa_{ep_1} + 2p_1") != std::string::npos);
}
