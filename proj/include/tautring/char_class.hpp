#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/multipoly.hpp"

namespace tautring {

// Normal-form monomial e^eps * p_1^{k_1} ... p_n^{k_n} with eps <= 1
// (the relation e^2 = p_n is applied eagerly at construction).
struct ClassMonomial {
    int e_exp = 0;
    Exponents p_exp;

    int rank() const { return static_cast<int>(p_exp.size()); }

    // topological degree: |e| = 2n, |p_i| = 4i
    int degree() const {
        int n = rank();
        int d = 2 * n * e_exp;
        for (int i = 0; i < n; ++i) d += 4 * (i + 1) * p_exp[i];
        return d;
    }

    bool is_unit() const {
        if (e_exp != 0) return false;
        for (int k : p_exp) if (k != 0) return false;
        return true;
    }

    friend bool operator==(const ClassMonomial& a, const ClassMonomial& b) {
        return a.e_exp == b.e_exp && a.p_exp == b.p_exp;
    }
};

// Canonical term order used for storage and rendering: degree descending,
// then p-exponents lex descending, then e-exponent ascending. This puts
// "4*p1 - 4*e" and "e*p1^2 + 3*p2" in the conventional reading order.
struct ClassTermLess {
    bool operator()(const ClassMonomial& a, const ClassMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        if (a.p_exp != b.p_exp) return a.p_exp > b.p_exp;
        return a.e_exp < b.e_exp;
    }
};

// Basis enumeration order: degree ascending, same tie-breaks.
struct BasisLess {
    bool operator()(const ClassMonomial& a, const ClassMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.p_exp != b.p_exp) return a.p_exp > b.p_exp;
        return a.e_exp < b.e_exp;
    }
};

// A 2n-dimensional oriented torus representation: n integer weight vectors
// (characters, i.e. linear forms in x_1..x_n) and an orientation sign.
struct OrientedRep {
    int n = 0;
    std::vector<std::vector<long long>> weights; // exactly n vectors of length n
    int sign = 1;

    // isolated <=> every weight vector is nonzero
    bool is_isolated() const {
        for (const auto& w : weights) {
            bool nonzero = false;
            for (long long c : w) if (c != 0) { nonzero = true; break; }
            if (!nonzero) return false;
        }
        return true;
    }

    // index of the first zero weight vector, if any
    std::optional<int> zero_weight_index() const {
        for (size_t j = 0; j < weights.size(); ++j) {
            bool nonzero = false;
            for (long long c : weights[j]) if (c != 0) { nonzero = true; break; }
            if (!nonzero) return static_cast<int>(j);
        }
        return std::nullopt;
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("OrientedRep: rank must be >= 1");
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("OrientedRep: expected n weight vectors");
        for (const auto& w : weights)
            if (static_cast<int>(w.size()) != n)
                throw std::invalid_argument("OrientedRep: weight vector length mismatch");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("OrientedRep: sign must be +1 or -1");
    }

    static OrientedRep standard(int n) {
        OrientedRep r;
        r.n = n;
        r.weights.assign(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) r.weights[i][i] = 1;
        r.sign = 1;
        return r;
    }
};

// sign * product of the weight linear forms; zero if any weight vanishes
inline MultiPoly euler_of_rep(const OrientedRep& rep) {
    rep.validate();
    MultiPoly e = MultiPoly::constant(rep.n, Rational(rep.sign));
    for (const auto& w : rep.weights)
        e *= MultiPoly::linear_form(std::span<const long long>(w));
    return e;
}

// p_i = e_i(w_1^2, ..., w_n^2); independent of the orientation sign
inline MultiPoly pontryagin_of_rep(const OrientedRep& rep, int i) {
    rep.validate();
    if (i < 1 || i > rep.n)
        throw std::out_of_range("pontryagin_of_rep: index out of range");
    std::vector<MultiPoly> squares;
    squares.reserve(rep.n);
    for (const auto& w : rep.weights) {
        MultiPoly f = MultiPoly::linear_form(std::span<const long long>(w));
        squares.push_back(f * f);
    }
    return elementary_symmetric(i, squares);
}

// Element of H^*(BSO(2n);Q) = Q[p_1..p_{n-1}, e] written in the normal form
// with p_n = e^2: a Q-linear combination of monomials p_I and e*p_I.
class CharClass {
public:
    using TermMap = std::map<ClassMonomial, Rational, ClassTermLess>;

    explicit CharClass(int n = 1) : n_(n) {
        if (n < 1) throw std::invalid_argument("CharClass: rank must be >= 1");
    }

    static CharClass zero(int n) { return CharClass(n); }

    static CharClass constant(int n, Rational c) {
        CharClass r(n);
        r.add_term(ClassMonomial{0, Exponents(n, 0)}, std::move(c));
        return r;
    }

    static CharClass one(int n) { return constant(n, Rational(1)); }

    static CharClass euler(int n) {
        CharClass r(n);
        r.add_term(ClassMonomial{1, Exponents(n, 0)}, Rational(1));
        return r;
    }

    static CharClass pontryagin(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("CharClass: p_i index out of range");
        CharClass r(n);
        ClassMonomial m{0, Exponents(n, 0)};
        m.p_exp[i - 1] = 1;
        r.add_term(std::move(m), Rational(1));
        return r;
    }

    static CharClass from_monomial(int n, ClassMonomial m, Rational c = Rational(1)) {
        CharClass r(n);
        if (static_cast<int>(m.p_exp.size()) != n)
            throw std::invalid_argument("CharClass: monomial rank mismatch");
        r.add_term(std::move(m), std::move(c));
        return r;
    }

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational();
        if (!is_constant()) throw std::logic_error("CharClass: not a constant");
        return terms_.begin()->second;
    }

    bool is_homogeneous() const {
        bool first = true;
        int deg = 0;
        for (const auto& [m, c] : terms_) {
            if (first) { deg = m.degree(); first = false; }
            else if (m.degree() != deg) return false;
        }
        return true;
    }

    // degree of a homogeneous class; -1 for zero
    int degree() const {
        if (terms_.empty()) return -1;
        if (!is_homogeneous()) throw std::logic_error("CharClass: degree of inhomogeneous class");
        return terms_.begin()->first.degree();
    }

    friend bool operator==(const CharClass& a, const CharClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CharClass& a, const CharClass& b) { return !(a == b); }

    friend CharClass operator+(const CharClass& a, const CharClass& b) {
        a.check_same_ring(b);
        CharClass r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend CharClass operator-(const CharClass& a, const CharClass& b) {
        a.check_same_ring(b);
        CharClass r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    CharClass operator-() const {
        CharClass r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend CharClass operator*(const CharClass& a, const CharClass& b) {
        a.check_same_ring(b);
        CharClass r(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                ClassMonomial m;
                m.e_exp = ma.e_exp + mb.e_exp;
                m.p_exp.resize(a.n_);
                for (int i = 0; i < a.n_; ++i) m.p_exp[i] = ma.p_exp[i] + mb.p_exp[i];
                r.add_term(std::move(m), ca * cb);
            }
        }
        return r;
    }

    friend CharClass operator*(const Rational& c, const CharClass& cls) {
        CharClass r(cls.n_);
        if (c.is_zero()) return r;
        for (const auto& [m, mc] : cls.terms_) r.terms_.emplace(m, c * mc);
        return r;
    }

    CharClass& operator+=(const CharClass& o) { *this = *this + o; return *this; }
    CharClass& operator-=(const CharClass& o) { *this = *this - o; return *this; }
    CharClass& operator*=(const CharClass& o) { *this = *this * o; return *this; }

    CharClass pow(unsigned e) const {
        CharClass acc = one(n_);
        CharClass base = *this;
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    // e -> -e, p_i -> p_i (the automorphism induced by conjugation by a reflection)
    CharClass conjugate() const {
        CharClass r(n_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, m.e_exp ? -c : c);
        return r;
    }

    // substitute e -> euler_of_rep, p_i -> pontryagin_of_rep
    MultiPoly eval(const OrientedRep& rep) const {
        if (rep.n != n_) throw std::invalid_argument("CharClass: rep rank mismatch");
        MultiPoly e_poly = euler_of_rep(rep);
        std::vector<MultiPoly> p_polys;
        p_polys.reserve(n_);
        for (int i = 1; i <= n_; ++i) p_polys.push_back(pontryagin_of_rep(rep, i));

        std::vector<std::vector<MultiPoly>> p_powers(n_);
        auto p_power = [&](int i, int e) -> const MultiPoly& {
            auto& tab = p_powers[i];
            if (tab.empty()) tab.push_back(MultiPoly::constant(n_, Rational(1)));
            while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * p_polys[i]);
            return tab[e];
        };

        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(n_, c);
            if (m.e_exp) t *= e_poly;
            for (int i = 0; i < n_; ++i)
                if (m.p_exp[i] > 0) t *= p_power(i, m.p_exp[i]);
            r += t;
        }
        return r;
    }

    // expansion in H^*(BT;Q): p_i -> e_i(x_1^2,..,x_n^2), e -> x_1...x_n
    MultiPoly expand() const { return eval(OrientedRep::standard(n_)); }

    // plain-text rendering, e.g. "e*p1^2 + 3*p2"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            bool negative = c.sign() < 0;
            Rational mag = negative ? -c : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string vars = monomial_text(m);
            if (vars.empty()) out += mag.to_string();
            else if (mag == Rational(1)) out += vars;
            else out += mag.to_string() + "*" + vars;
        }
        return out;
    }

    // LaTeX rendering matching the usual notation, e.g. "ep_1^2 + 3p_2"
    std::string to_latex() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            bool negative = c.sign() < 0;
            Rational mag = negative ? -c : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string vars = monomial_latex(m);
            if (vars.empty()) out += rational_latex(mag);
            else if (mag == Rational(1)) out += vars;
            else out += rational_latex(mag) + vars;
        }
        return out;
    }

    static std::string monomial_text(const ClassMonomial& m) {
        std::string vars;
        if (m.e_exp) {
            vars += "e";
            if (m.e_exp > 1) vars += "^" + std::to_string(m.e_exp);
        }
        for (size_t i = 0; i < m.p_exp.size(); ++i) {
            if (m.p_exp[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "p" + std::to_string(i + 1);
            if (m.p_exp[i] > 1) vars += "^" + std::to_string(m.p_exp[i]);
        }
        return vars; // empty for the unit monomial
    }

    static std::string monomial_latex(const ClassMonomial& m) {
        std::string vars;
        if (m.e_exp) vars += "e";
        for (size_t i = 0; i < m.p_exp.size(); ++i) {
            if (m.p_exp[i] == 0) continue;
            vars += "p_" + brace(i + 1);
            if (m.p_exp[i] > 1) vars += "^" + brace(m.p_exp[i]);
        }
        return vars;
    }

private:
    int n_;
    TermMap terms_;

    static std::string brace(size_t v) {
        std::string s = std::to_string(v);
        return s.size() == 1 ? s : "{" + s + "}";
    }

    static std::string rational_latex(const Rational& q) {
        if (q.is_integer()) return q.numerator().to_string();
        std::string sign = q.sign() < 0 ? "-" : "";
        Rational a = q.sign() < 0 ? -q : q;
        return sign + "\\tfrac{" + a.numerator().to_string() + "}{" +
               a.denominator().to_string() + "}";
    }

    void check_same_ring(const CharClass& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CharClass: rank mismatch");
    }

    // inserts with the normal form e^k = e^{k mod 2} * p_n^{k/2} applied
    void add_term(ClassMonomial m, Rational c) {
        if (c.is_zero()) return;
        if (m.e_exp > 1) {
            m.p_exp[n_ - 1] += m.e_exp / 2;
            m.e_exp %= 2;
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

// All normal-form monomials of degree <= max_degree, each once, ordered by
// degree then the canonical tie-breaks.
inline std::vector<ClassMonomial> monomial_basis(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("monomial_basis: rank must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("monomial_basis: negative degree bound");
    std::vector<ClassMonomial> out;
    for (int e_exp = 0; e_exp <= 1; ++e_exp) {
        int budget = max_degree - 2 * n * e_exp;
        if (budget < 0) continue;
        Exponents p(n, 0);
        // depth-first over exponent vectors with sum of 4i*k_i <= budget
        auto rec = [&](auto&& self, int var, int remaining) -> void {
            if (var == n) {
                out.push_back(ClassMonomial{e_exp, p});
                return;
            }
            int step = 4 * (var + 1);
            for (int k = 0; k * step <= remaining; ++k) {
                p[var] = k;
                self(self, var + 1, remaining - k * step);
            }
            p[var] = 0;
        };
        rec(rec, 0, budget);
    }
    std::sort(out.begin(), out.end(), [](const ClassMonomial& a, const ClassMonomial& b) {
        return BasisLess{}(a, b);
    });
    return out;
}

} // namespace tautring
