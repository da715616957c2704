#include <doctest.h>

#include <random>

#include "tautring/manifolds.hpp"
#include "test_support.hpp"

using namespace tautring;

namespace {

CharClass p1(int n) { return CharClass::pontryagin(n, 1); }

TautPoly kappa_var(const ClassMonomial& m) {
    return TautPoly::generator(TautGenerator{TautGenerator::Kind::Kappa, m});
}

TautPoly point_var(const ClassMonomial& m) {
    return TautPoly::generator(TautGenerator{TautGenerator::Kind::PointClass, m});
}

TautPoly embed_points(const CharClass& c) {
    return TautPoly::from_char_class(c, TautGenerator::Kind::PointClass);
}

} // namespace

TEST_CASE("sphere builder") {
    auto s = sphere(2);
    CHECK(s.n == 2);
    REQUIRE(s.fixed_points.size() == 2);
    CHECK(s.fixed_points[0].rep.sign == 1);
    CHECK(s.fixed_points[1].rep.sign == -1);
    CHECK(s.m0 == 0);
    REQUIRE(s.m1.has_value());
    CHECK(*s.m1 == 1);

    auto e0 = euler_of_rep(s.fixed_points[0].rep);
    auto e1 = euler_of_rep(s.fixed_points[1].rep);
    CHECK(e0 == -e1);

    auto s1 = sphere(1);
    CHECK(s1.fixed_points[0].rep.weights == std::vector<std::vector<long long>>{{1}});
}

TEST_CASE("product builder") {
    auto M = product(sphere(1), sphere(1));
    REQUIRE(M.fixed_points.size() == 4);
    // signs +,-,-,+ at (0,0),(0,inf),(inf,0),(inf,inf)
    CHECK(M.fixed_points[0].rep.sign == 1);
    CHECK(M.fixed_points[1].rep.sign == -1);
    CHECK(M.fixed_points[2].rep.sign == -1);
    CHECK(M.fixed_points[3].rep.sign == 1);
    CHECK(M.m0 == 0);
    REQUIRE(M.m1.has_value());
    CHECK(*M.m1 == 1); // (0, inf)

    CHECK(product(sphere(1), sphere(2)).n == 3);

    auto chi = euler_characteristic(M);
    REQUIRE(chi.ok());
    CHECK(chi.value == Rational(4));

    // m1 propagation: products of products keep a retained point
    auto M2 = product(sphere(1), product(sphere(1), sphere(1)));
    CHECK(M2.m1.has_value());

    TorusManifold no_m1 = sphere(1);
    no_m1.m1.reset();
    CHECK(!product(sphere(1), no_m1).m1.has_value());
}

TEST_CASE("projective space builder") {
    auto M = projective_space(2);
    REQUIRE(M.fixed_points.size() == 3);
    CHECK(M.fixed_points[0].label == "[1:0:0]");

    // weights at [1:0:0] are x_1, x_2
    std::vector<std::vector<long long>> standard_weights{{1, 0}, {0, 1}};
    CHECK(M.fixed_points[0].rep.weights == standard_weights);

    // euler at [0:1:0] is x_1(x_1 - x_2)
    auto x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK(euler_of_rep(M.fixed_points[1].rep) == x1 * x1 - x1 * x2);

    for (const auto& fp : M.fixed_points) CHECK(fp.rep.is_isolated());
}

TEST_CASE("maximal torus validation") {
    CHECK(validate_maximal_torus(sphere(3)).ok);
    for (int n = 1; n <= 3; ++n) CHECK(validate_maximal_torus(projective_space(n)).ok);

    TorusManifold M = sphere(2);
    M.fixed_points[0].rep.weights[1] = {0, 0};
    auto check = validate_maximal_torus(M);
    CHECK(!check.ok);
    CHECK(check.zero_weight_index == 1);
}

TEST_CASE("point class transport on sphere products is the identity") {
    auto M = product(sphere(1), sphere(2));
    for (const auto& m : monomial_basis(3, 12)) {
        if (m.is_unit()) continue;
        auto r = point_class_transport(M, CharClass::from_monomial(3, m));
        REQUIRE(r.ok());
        CHECK(r.value == CharClass::from_monomial(3, m)); // c -> c
    }
}

TEST_CASE("point class transport fails on CP^2") {
    auto M = projective_space(2);
    auto r = point_class_transport(M, CharClass::euler(2));
    CHECK(r.status == TransportStatus::Unavailable);
    CHECK(r.witness.has_value());

    TorusManifold no_m1 = M;
    no_m1.m1.reset();
    auto r2 = point_class_transport(no_m1, CharClass::euler(2));
    CHECK(r2.status == TransportStatus::MissingM1);
}

TEST_CASE("connected sum homomorphism for sphere products") {
    // Theorem rows: kappa_{p_I} -> kappa_{p_I}, kappa_{e p_I} -> kappa_{e p_I} + 2 p_I,
    // c -> c. Both factor orders produce the same table.
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        auto M = product(sphere(a), sphere(b));
        int n = a + b;
        auto g = connected_sum_hom(M, 12);
        CHECK(g.point_class_status == PointClassStatus::Transported);
        CHECK(!g.entries.empty());
        for (const auto& [gen, image] : g.entries) {
            if (gen.kind == TautGenerator::Kind::Kappa) {
                TautPoly expected = kappa_var(gen.monomial);
                if (gen.monomial.e_exp == 1)
                    expected += Rational(2) * embed_points(CharClass::from_monomial(
                                                  n, ClassMonomial{0, gen.monomial.p_exp}));
                CHECK(image == expected);
            } else {
                CHECK(image == point_var(gen.monomial));
            }
        }
    }
}

TEST_CASE("pullback classes q_c for sphere products, before the correction") {
    // q_{p_I} = 0 and q_{e p_I} = 4 p_I, independent of (a, b)
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 2},
                        std::pair{3, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        auto M = product(sphere(a), sphere(b));
        int n = a + b;
        for (const auto& m : monomial_basis(n, 16)) {
            auto q = kappa_pullback(M, CharClass::from_monomial(n, m));
            REQUIRE(q.ok());
            if (m.e_exp == 0) {
                CHECK(q.value.is_zero());
            } else {
                CharClass expected = Rational(4) * CharClass::from_monomial(
                                         n, ClassMonomial{0, m.p_exp});
                CHECK(q.value == expected);
            }
        }
    }
}

TEST_CASE("stabilisation by a bare sphere is the identity table") {
    // q_{e p_I} = 2 p_I over S^{2n} cancels the -2 p_I correction, so
    // N # S^{2n} = N gives kappa -> kappa and c -> c on the nose.
    for (int k = 1; k <= 3; ++k) {
        auto g = connected_sum_hom(sphere(k), 12);
        CHECK(g.point_class_status == PointClassStatus::Transported);
        for (const auto& [gen, image] : g.entries)
            CHECK(image == TautPoly::generator(gen));
    }
}

TEST_CASE("connected sum homomorphism for CP^2") {
    auto g = connected_sum_hom(projective_space(2), 12);
    CHECK(g.point_class_status == PointClassStatus::Unavailable);
    for (const auto& [gen, image] : g.entries)
        CHECK(gen.kind == TautGenerator::Kind::Kappa); // kappa rows only

    // kappa_{p_1} -> kappa_{p_1} + 3 (q_{0,1} = 3)
    ClassMonomial p1_mono{0, {1, 0}};
    auto it = g.entries.find(TautGenerator{TautGenerator::Kind::Kappa, p1_mono});
    REQUIRE(it != g.entries.end());
    CHECK(it->second == kappa_var(p1_mono) + TautPoly::constant(Rational(3)));

    // kappa_{e p_1}: q_{1,1} - 2 p_1 = (4 p_1 - 4 e) - 2 p_1 = 2 p_1 - 4 e
    ClassMonomial ep1{1, {1, 0}};
    auto it2 = g.entries.find(TautGenerator{TautGenerator::Kind::Kappa, ep1});
    REQUIRE(it2 != g.entries.end());
    CharClass corr = Rational(2) * p1(2) - Rational(4) * CharClass::euler(2);
    CHECK(it2->second == kappa_var(ep1) + embed_points(corr));
}

TEST_CASE("homomorphism images are homogeneous") {
    for (const auto& M : {product(sphere(1), sphere(2)), projective_space(2)}) {
        auto g = connected_sum_hom(M, 14);
        for (const auto& [gen, image] : g.entries)
            CHECK(image.is_homogeneous_of_degree(gen.degree()));
    }
}

TEST_CASE("generator-level surjectivity is triangular") {
    // every image is its own generator plus a point-class-only tail
    auto g = connected_sum_hom(product(sphere(1), sphere(1)), 12);
    for (const auto& [gen, image] : g.entries) {
        TautPoly tail = image - TautPoly::generator(gen);
        for (const auto& [mono, coeff] : tail.terms())
            for (const auto& [var, power] : mono)
                CHECK(var.kind == TautGenerator::Kind::PointClass);
    }
}

TEST_CASE("conjugated homomorphism") {
    auto g = connected_sum_hom(product(sphere(1), sphere(1)), 12);
    auto cg = conjugated_hom(g);

    // c = e row flips sign; kappa rows unchanged
    ClassMonomial e_mono{1, {0, 0}};
    auto it = cg.entries.find(TautGenerator{TautGenerator::Kind::PointClass, e_mono});
    REQUIRE(it != cg.entries.end());
    CHECK(it->second == Rational(-1) * point_var(e_mono));

    for (const auto& [gen, image] : g.entries) {
        if (gen.kind == TautGenerator::Kind::Kappa)
            CHECK(cg.entries.at(gen) == image);
    }

    // involution
    auto back = conjugated_hom(cg);
    CHECK(back.entries == g.entries);

    auto cp2 = connected_sum_hom(projective_space(2), 8);
    CHECK_THROWS_AS(conjugated_hom(cp2), std::invalid_argument);
}

TEST_CASE("fiber restriction") {
    auto g = connected_sum_hom(product(sphere(1), sphere(2)), 12);
    auto t = fiber_restriction(g);
    REQUIRE(t.entries.size() == g.entries.size());
    for (const auto& [gen, image] : t.entries) {
        if (gen.kind == TautGenerator::Kind::Kappa) {
            if (gen.monomial.e_exp == 0) {
                CHECK(image.is_zero()); // kappa_{p_I} -> 0
            } else {
                // kappa_{e p_I} -> 2 p_I(TN)
                TautPoly expected = Rational(2) * TautPoly::from_char_class(
                    CharClass::from_monomial(3, ClassMonomial{0, gen.monomial.p_exp}),
                    TautGenerator::Kind::TangentClass);
                CHECK(image == expected);
            }
        } else {
            // c -> c(TN)
            TautPoly expected = TautPoly::generator(
                TautGenerator{TautGenerator::Kind::TangentClass, gen.monomial});
            CHECK(image == expected);
        }
    }
}

TEST_CASE("full pipeline on hand-written fixed-point data") {
    // a circle acting on S^2 at double speed: weights (2) at both poles
    TorusManifold M;
    M.name = "S2-double-speed";
    M.n = 1;
    OrientedRep north, south;
    north.n = 1; north.sign = 1; north.weights = {{2}};
    south.n = 1; south.sign = -1; south.weights = {{2}};
    M.fixed_points.push_back({"0", north});
    M.fixed_points.push_back({"inf", south});
    M.m0 = 0;
    M.m1 = 1;

    auto chi = euler_characteristic(M);
    REQUIRE(chi.ok());
    CHECK(chi.value == Rational(2));

    auto g = connected_sum_hom(M, 8);
    CHECK(g.point_class_status == PointClassStatus::Transported);
    for (const auto& [gen, image] : g.entries)
        CHECK(image.is_homogeneous_of_degree(gen.degree()));

    // q_e = chi = 2 cancels the -2 correction whatever the weights are
    ClassMonomial e_mono{1, {0}};
    CHECK(g.entries.at(TautGenerator{TautGenerator::Kind::Kappa, e_mono}) ==
          TautPoly::generator(TautGenerator{TautGenerator::Kind::Kappa, e_mono}));
}

TEST_CASE("builder input validation") {
    CHECK_THROWS_AS(sphere(0), std::invalid_argument);
    CHECK_THROWS_AS(sphere(7), std::invalid_argument);
    CHECK_THROWS_AS(projective_space(0), std::invalid_argument);
    CHECK_THROWS_AS(product(sphere(4), sphere(3)), std::invalid_argument);

    TorusManifold bad = sphere(2);
    bad.fixed_points[0].rep.weights[0] = {0, 0};
    CHECK_THROWS_AS(connected_sum_hom(bad, 8), std::invalid_argument);
}
