#pragma once

#include <random>
#include <vector>

#include "tautring/char_class.hpp"
#include "tautring/multipoly.hpp"

// Seeded generators shared by the property tests. Everything is
// deterministic: same seed, same sequence.
namespace testsupport {

using tautring::CharClass;
using tautring::ClassMonomial;
using tautring::Exponents;
using tautring::MultiPoly;
using tautring::Rational;

inline Rational random_rational(std::mt19937_64& rng, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int max_abs = 9) {
    for (;;) {
        Rational q = random_rational(rng, max_abs);
        if (!q.is_zero()) return q;
    }
}

inline MultiPoly random_poly(std::mt19937_64& rng, int num_vars, int max_degree,
                             int max_terms = 6) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_degree);
    MultiPoly p(num_vars);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(num_vars);
        int budget = max_degree;
        for (int i = 0; i < num_vars; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            e[i] = pick(rng);
            budget -= e[i];
        }
        p += MultiPoly::monomial(num_vars, std::move(e), random_rational(rng));
    }
    return p;
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, int num_vars, int max_degree,
                                     int max_terms = 6) {
    for (;;) {
        MultiPoly p = random_poly(rng, num_vars, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline CharClass random_char_class(std::mt19937_64& rng, int n, int max_degree,
                                   int max_terms = 5) {
    auto basis = tautring::monomial_basis(n, max_degree);
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    CharClass c(n);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t)
        c += CharClass::from_monomial(n, basis[pick(rng)], random_rational(rng));
    return c;
}

} // namespace testsupport
