#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/char_class.hpp"
#include "tautring/multipoly.hpp"

namespace tautring {

// Weyl group of D_n acting on Q[x_1..x_n]: permutations and even sign
// changes. Generated by the adjacent transpositions together with the
// double sign flip (x_1, x_2) -> (-x_1, -x_2); trivial for n = 1.
struct WeylContext {
    int n = 1;
};

// A group generator witnessing non-invariance.
struct WeylGenerator {
    enum class Kind { Transposition, DoubleSignFlip };
    Kind kind = Kind::Transposition;
    int index = 0; // transposition swaps x_{index+1} and x_{index+2}

    std::string describe() const {
        if (kind == Kind::DoubleSignFlip) return "(x1,x2) -> (-x1,-x2)";
        return "x" + std::to_string(index + 1) + " <-> x" + std::to_string(index + 2);
    }
};

inline MultiPoly apply_transposition(const MultiPoly& f, int i) {
    MultiPoly r(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        std::swap(e2[i], e2[i + 1]);
        r += MultiPoly::monomial(f.num_vars(), std::move(e2), c);
    }
    return r;
}

inline MultiPoly apply_double_sign_flip(const MultiPoly& f) {
    MultiPoly r(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        bool odd = ((e[0] + e[1]) % 2) != 0;
        r += MultiPoly::monomial(f.num_vars(), e, odd ? -c : c);
    }
    return r;
}

// Returns a generator under which f is not invariant, or nullopt.
inline std::optional<WeylGenerator> weyl_invariance_witness(const MultiPoly& f,
                                                            const WeylContext& ctx) {
    if (f.num_vars() != ctx.n)
        throw std::invalid_argument("weyl_invariance_witness: variable count mismatch");
    if (ctx.n == 1) return std::nullopt; // Weyl(D_1) is trivial
    for (int i = 0; i + 1 < ctx.n; ++i)
        if (apply_transposition(f, i) != f)
            return WeylGenerator{WeylGenerator::Kind::Transposition, i};
    if (apply_double_sign_flip(f) != f)
        return WeylGenerator{WeylGenerator::Kind::DoubleSignFlip, 0};
    return std::nullopt;
}

inline bool is_weyl_invariant(const MultiPoly& f, const WeylContext& ctx) {
    return !weyl_invariance_witness(f, ctx).has_value();
}

struct SymmetricReduceResult {
    std::optional<MultiPoly> value;   // polynomial in E_1..E_n on success
    Exponents bad_monomial;           // leading monomial that broke symmetry
    bool ok() const { return value.has_value(); }
};

// Fundamental theorem of symmetric polynomials, by leading-term reduction:
// subtract c * E_1^{a_1-a_2} ... E_n^{a_n} matching the leading monomial and
// iterate; the leading term strictly decreases, so this terminates. A leading
// exponent vector that is not non-increasing witnesses asymmetry.
inline SymmetricReduceResult symmetric_reduce(const MultiPoly& h) {
    const int n = h.num_vars();
    if (n == 0) throw std::invalid_argument("symmetric_reduce: no variables");

    std::vector<MultiPoly> vars;
    vars.reserve(n);
    for (int i = 0; i < n; ++i) vars.push_back(MultiPoly::variable(n, i));
    std::vector<MultiPoly> elem(n + 1, MultiPoly(n));
    for (int i = 1; i <= n; ++i) elem[i] = elementary_symmetric(i, vars);

    // power cache for the expanded e_i(y)
    std::vector<std::vector<MultiPoly>> powers(n + 1);
    auto elem_power = [&](int i, int e) -> const MultiPoly& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(MultiPoly::constant(n, Rational(1)));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * elem[i]);
        return tab[e];
    };

    MultiPoly rem = h;
    MultiPoly out(n);
    while (!rem.is_zero()) {
        const auto& lead = *rem.terms().rbegin();
        const Exponents& a = lead.first;
        for (int i = 0; i + 1 < n; ++i) {
            if (a[i] < a[i + 1])
                return {std::nullopt, a};
        }
        Exponents e_exps(n);
        for (int i = 0; i < n; ++i)
            e_exps[i] = a[i] - (i + 1 < n ? a[i + 1] : 0);
        MultiPoly expansion = MultiPoly::constant(n, lead.second);
        for (int i = 0; i < n; ++i)
            if (e_exps[i] > 0) expansion *= elem_power(i + 1, e_exps[i]);
        out += MultiPoly::monomial(n, std::move(e_exps), lead.second);
        rem -= expansion;
    }
    return {std::move(out), {}};
}

struct ToPeResult {
    std::optional<CharClass> value;
    std::optional<WeylGenerator> witness; // set when not Weyl-invariant
    bool ok() const { return value.has_value(); }
};

// Rewrites a Weyl(D_n)-invariant polynomial in the p_i = e_i(x^2), e = x_1..x_n
// basis. Splits f by the per-monomial parity dichotomy, divides the odd part
// by e, and reduces both halves as symmetric polynomials in y_i = x_i^2.
inline ToPeResult to_pe_basis(const MultiPoly& f, const WeylContext& ctx) {
    const int n = ctx.n;
    if (f.num_vars() != n)
        throw std::invalid_argument("to_pe_basis: variable count mismatch");

    if (n == 1) {
        // Q[x_1] = Q[e] with p_1 = e^2
        CharClass out(1);
        for (const auto& [e, c] : f.terms()) {
            ClassMonomial m{e[0] % 2, Exponents{e[0] / 2}};
            out += CharClass::from_monomial(1, std::move(m), c);
        }
        return {std::move(out), std::nullopt};
    }

    if (auto w = weyl_invariance_witness(f, ctx))
        return {std::nullopt, w};

    // Invariance forces every monomial to have all exponents even or all odd.
    MultiPoly even(n), odd_over_e(n);
    for (const auto& [e, c] : f.terms()) {
        int parity = e[0] % 2;
        for (int i = 1; i < n; ++i) {
            if (e[i] % 2 != parity)
                throw std::logic_error("to_pe_basis: invariant with mixed-parity monomial");
        }
        if (parity == 0) {
            even += MultiPoly::monomial(n, e, c);
        } else {
            Exponents shifted = e;
            for (int& k : shifted) k -= 1;
            odd_over_e += MultiPoly::monomial(n, std::move(shifted), c);
        }
    }

    auto in_squares = [n](const MultiPoly& g) {
        MultiPoly h(n);
        for (const auto& [e, c] : g.terms()) {
            Exponents half = e;
            for (int& k : half) k /= 2;
            h += MultiPoly::monomial(n, std::move(half), c);
        }
        return h;
    };

    auto even_part = symmetric_reduce(in_squares(even));
    auto odd_part = symmetric_reduce(in_squares(odd_over_e));
    if (!even_part.ok() || !odd_part.ok())
        throw std::logic_error("to_pe_basis: invariant polynomial failed symmetric reduction");

    CharClass out(n);
    for (const auto& [e, c] : even_part.value->terms())
        out += CharClass::from_monomial(n, ClassMonomial{0, e}, c);
    for (const auto& [e, c] : odd_part.value->terms())
        out += CharClass::from_monomial(n, ClassMonomial{1, e}, c);
    return {std::move(out), std::nullopt};
}

} // namespace tautring
