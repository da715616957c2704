#include <doctest.h>

#include <random>

#include "tautring/rational.hpp"

using tautring::BigInt;
using tautring::Rational;

TEST_CASE("rational reduction and normal form") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2"); // denominator kept positive
    CHECK(Rational(0, 17).to_string() == "0");
    CHECK(Rational(0, 17).denominator() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    Rational half(1, 2), third(1, 3);
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - third).to_string() == "1/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK((half - half).is_zero());
    CHECK(Rational(2, 3).pow(-2).to_string() == "9/4");
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-7/14") == Rational(-1, 2));
}

TEST_CASE("rational field laws on random values") {
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        int an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
        if (ad == 0 || bd == 0) continue;
        Rational a(an, ad), b(bn, bd);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
