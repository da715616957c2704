#include <doctest.h>

#include <random>

#include "tautring/multipoly.hpp"
#include "test_support.hpp"

using namespace tautring;
using testsupport::random_nonzero_poly;
using testsupport::random_poly;
using testsupport::random_rational;

namespace {

MultiPoly x(int nv, int i) { return MultiPoly::variable(nv, i); }

} // namespace

TEST_CASE("ring operations") {
    auto x1 = x(2, 0), x2 = x(2, 1);

    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK((x1 * x2 * MultiPoly(2)).is_zero());
    CHECK((MultiPoly(2) * x1).term_count() == 0);

    auto f = x1 * x1 + x2 * x2;
    auto expanded = f.pow(2);
    auto expected = x1.pow(4) + Rational(2) * (x1 * x1 * x2 * x2) + x2.pow(4);
    CHECK(expanded == expected);

    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
}

TEST_CASE("exact division") {
    auto x1 = x(2, 0), x2 = x(2, 1);

    auto f = x1 * x1 * x2 + x1 * x2 * x2;
    auto d = f.divide(x1 * x2);
    CHECK(d.exact());
    CHECK(d.quotient == x1 + x2);

    auto g = x1 * x1 + x2 * x2;
    auto d2 = g.divide(x1 * x2);
    CHECK(!d2.exact());
    CHECK(!d2.remainder.is_zero()); // witness of non-divisibility

    auto d3 = MultiPoly(2).divide(x1 * x2 * (x1 * x1 - x1 * x2));
    CHECK(d3.exact());
    CHECK(d3.quotient.is_zero());

    CHECK_THROWS_AS(f.divide(MultiPoly(2)), std::domain_error);
}

TEST_CASE("substitute") {
    auto x1 = x(2, 0), x2 = x(2, 1);
    auto f = x1 * x1 + x2 * x2;

    // p_1 of the CP^2 representation at [0:1:0]: x_1^2 + (x_2 - x_1)^2
    std::vector<MultiPoly> images{x1, x2 - x1};
    auto g = f.substitute(images);
    CHECK(g == x1 * x1 + (x2 - x1) * (x2 - x1));

    std::vector<MultiPoly> identity{x1, x2};
    CHECK(f.substitute(identity) == f);

    std::vector<MultiPoly> zeros{MultiPoly(2), MultiPoly(2)};
    auto h = f + MultiPoly::constant(2, Rational(5));
    CHECK(h.substitute(zeros) == MultiPoly::constant(2, Rational(5)));

    std::vector<MultiPoly> short_list{x1};
    CHECK_THROWS_AS(f.substitute(short_list), std::invalid_argument);
}

TEST_CASE("evaluate") {
    auto x1 = x(2, 0), x2 = x(2, 1);
    std::vector<Rational> p23{Rational(2), Rational(3)};
    CHECK((x1 * x2).evaluate(p23) == Rational(6));

    std::vector<Rational> halves{Rational(1, 2), Rational(1, 2)};
    CHECK((x1 * x1 + x2 * x2).evaluate(halves) == Rational(1, 2));

    std::vector<Rational> bad{Rational(1)};
    CHECK_THROWS_AS((x1 * x2).evaluate(bad), std::invalid_argument);
}

TEST_CASE("graded part") {
    auto x1 = x(2, 0), x2 = x(2, 1);
    auto f = MultiPoly::constant(2, Rational(1)) + x1 * x2;
    std::vector<int> w{2, 2};

    CHECK(f.graded_part(4, w) == x1 * x2);
    CHECK(f.graded_part(10, w).is_zero());

    auto h = x1 * x1 - x1 * x2; // homogeneous of weighted degree 4
    CHECK(h.graded_part(4, w) == h);
    CHECK(h.is_homogeneous(w));
    CHECK(!f.is_homogeneous(w));
}

TEST_CASE("canonical form: f + (-f) has an empty term map") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, 3, 8);
        CHECK((f - f).term_count() == 0);
        CHECK((f + (-f)).is_zero());
    }
}

TEST_CASE("division of f*g by g recovers f") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, 3, 6, 4);
        auto g = random_nonzero_poly(rng, 3, 6, 4);
        auto d = (f * g).divide(g);
        CHECK(d.exact());
        CHECK(d.quotient == f);
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(rng, 2, 5, 4);
        auto g = random_poly(rng, 2, 5, 4);
        std::vector<MultiPoly> images{random_poly(rng, 2, 3, 3), random_poly(rng, 2, 3, 3)};
        CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
        CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    }
}

TEST_CASE("evaluate commutes with substitute") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(rng, 2, 5, 4);
        std::vector<MultiPoly> images{random_poly(rng, 2, 3, 3), random_poly(rng, 2, 3, 3)};
        std::vector<Rational> pt{random_rational(rng), random_rational(rng)};
        std::vector<Rational> image_values{images[0].evaluate(pt), images[1].evaluate(pt)};
        CHECK(f.substitute(images).evaluate(pt) == f.evaluate(image_values));
    }
}

TEST_CASE("q_{0,2} identity holds at 100 random rational points") {
    // both sides of sum(p_i^2 / e_i) = 7 p_1 - 7 e over the three CP^2
    // fixed points, evaluated as exact rationals
    auto x1 = x(2, 0), x2 = x(2, 1);
    struct Datum { MultiPoly e, p; };
    const Datum data[] = {
        {x1 * x2, x1 * x1 + x2 * x2},
        {x1 * x1 - x1 * x2, x1 * x1 + (x2 - x1) * (x2 - x1)},
        {x2 * x2 - x1 * x2, x2 * x2 + (x1 - x2) * (x1 - x2)},
    };
    auto rhs = Rational(7) * (x1 * x1 + x2 * x2) - Rational(7) * (x1 * x2);

    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 50);
    int checked = 0;
    while (checked < 100) {
        std::vector<Rational> pt{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        bool valid = true;
        for (const auto& d : data)
            if (d.e.evaluate(pt).is_zero()) valid = false;
        if (!valid) continue;
        Rational lhs;
        for (const auto& d : data) {
            Rational pv = d.p.evaluate(pt);
            lhs += pv * pv / d.e.evaluate(pt);
        }
        CHECK(lhs == rhs.evaluate(pt));
        ++checked;
    }
}

TEST_CASE("elementary symmetric") {
    auto x1 = x(2, 0), x2 = x(2, 1);
    std::vector<MultiPoly> squares{x1 * x1, x2 * x2};
    CHECK(elementary_symmetric(1, squares) == x1 * x1 + x2 * x2);

    std::vector<MultiPoly> vars{x1, x2};
    CHECK(elementary_symmetric(2, vars) == x1 * x2);
    CHECK(elementary_symmetric(0, vars) == MultiPoly::constant(2, Rational(1)));
    CHECK_THROWS_AS(elementary_symmetric(3, vars), std::out_of_range);
}

TEST_CASE("polynomial rendering") {
    auto x1 = x(2, 0), x2 = x(2, 1);
    CHECK(MultiPoly(2).to_string() == "0");
    auto f = Rational(4) * (x1 * x1) - Rational(4) * (x1 * x2) + Rational(4) * (x2 * x2);
    CHECK(f.to_string() == "4*x1^2 - 4*x1*x2 + 4*x2^2");
    CHECK((x1 - MultiPoly::constant(2, Rational(1, 2))).to_string() == "x1 - 1/2");
}
