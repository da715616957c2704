#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

// Exponent vector of a monomial; length is the variable count of the ambient ring.
using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lex on exponents.
// Gives a well-defined leading term for the reduction in MultiPoly::divide.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Rational in variables x_1..x_n.
// Canonical form: no zero coefficients are stored, so equality is map equality.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
    }

    static MultiPoly constant(int num_vars, Rational c) {
        MultiPoly p(num_vars);
        p.add_term(Exponents(num_vars, 0), std::move(c));
        return p;
    }

    // x_{index+1}
    static MultiPoly variable(int num_vars, int index) {
        if (index < 0 || index >= num_vars)
            throw std::out_of_range("MultiPoly: variable index out of range");
        MultiPoly p(num_vars);
        Exponents e(num_vars, 0);
        e[index] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    static MultiPoly monomial(int num_vars, Exponents exps, Rational c) {
        if (static_cast<int>(exps.size()) != num_vars)
            throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        MultiPoly p(num_vars);
        p.add_term(std::move(exps), std::move(c));
        return p;
    }

    // sum of coeffs[i] * x_{i+1}
    static MultiPoly linear_form(std::span<const long long> coeffs) {
        MultiPoly p(static_cast<int>(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(std::move(e), Rational(coeffs[i]));
        }
        return p;
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // total degree in the x variables; -1 for the zero polynomial
    int total_degree() const {
        if (terms_.empty()) return -1;
        const Exponents& lead = terms_.rbegin()->first;
        return std::accumulate(lead.begin(), lead.end(), 0);
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }

    Rational constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_ring(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_ring(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(num_vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_ring(b);
        MultiPoly r(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.num_vars_);
                for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r(p.num_vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(num_vars_, Rational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    struct DivisionOutcome;

    // Leading-term reduction under graded lex. The quotient/remainder pair is
    // unique: no monomial of the remainder is divisible by the divisor's
    // leading monomial, so remainder == 0 iff the division is exact.
    DivisionOutcome divide(const MultiPoly& g) const;

    // simultaneous substitution x_i -> images[i]; images share a common ring
    MultiPoly substitute(std::span<const MultiPoly> images) const {
        if (static_cast<int>(images.size()) != num_vars_)
            throw std::invalid_argument("MultiPoly: substitute image count mismatch");
        int target_vars = images.empty() ? 0 : images[0].num_vars_;
        for (const auto& im : images)
            if (im.num_vars_ != target_vars)
                throw std::invalid_argument("MultiPoly: substitute images in different rings");
        // incremental power tables per variable
        std::vector<std::vector<MultiPoly>> powers(num_vars_);
        auto power_of = [&](int var, int e) -> const MultiPoly& {
            auto& tab = powers[var];
            if (tab.empty()) tab.push_back(constant(target_vars, Rational(1)));
            while (static_cast<int>(tab.size()) <= e)
                tab.push_back(tab.back() * images[var]);
            return tab[e];
        };
        MultiPoly r(target_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(target_vars, c);
            for (int i = 0; i < num_vars_; ++i)
                if (e[i] > 0) t *= power_of(i, e[i]);
            r += t;
        }
        return r;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw std::invalid_argument("MultiPoly: evaluation point length mismatch");
        std::vector<std::vector<Rational>> powers(num_vars_);
        auto power_of = [&](int var, int e) -> const Rational& {
            auto& tab = powers[var];
            if (tab.empty()) tab.push_back(Rational(1));
            while (static_cast<int>(tab.size()) <= e)
                tab.push_back(tab.back() * point[var]);
            return tab[e];
        };
        Rational r;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < num_vars_; ++i)
                if (e[i] > 0) t *= power_of(i, e[i]);
            r += t;
        }
        return r;
    }

    // sum of terms whose weighted exponent total equals degree
    MultiPoly graded_part(int degree, std::span<const int> weights) const {
        if (static_cast<int>(weights.size()) != num_vars_)
            throw std::invalid_argument("MultiPoly: graded_part weight count mismatch");
        MultiPoly r(num_vars_);
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int i = 0; i < num_vars_; ++i) d += weights[i] * e[i];
            if (d == degree) r.terms_.emplace(e, c);
        }
        return r;
    }

    bool is_homogeneous(std::span<const int> weights) const {
        if (static_cast<int>(weights.size()) != num_vars_)
            throw std::invalid_argument("MultiPoly: weight count mismatch");
        bool first = true;
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int i = 0; i < num_vars_; ++i) d += weights[i] * e[i];
            if (first) { deg = d; first = false; }
            else if (d != deg) return false;
        }
        return true;
    }

    // "4*x1^2 - 4*x1*x2", highest graded-lex term first
    std::string to_string(const std::string& var_prefix = "x") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool negative = c.sign() < 0;
            Rational mag = negative ? -c : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < num_vars_; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += var_prefix + std::to_string(i + 1);
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (vars.empty()) {
                out += mag.to_string();
            } else if (mag == Rational(1)) {
                out += vars;
            } else {
                out += mag.to_string() + "*" + vars;
            }
        }
        return out;
    }

private:
    int num_vars_;
    TermMap terms_;

    void check_same_ring(const MultiPoly& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    void add_term(Exponents e, Rational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

struct MultiPoly::DivisionOutcome {
    MultiPoly quotient;
    MultiPoly remainder; // witness of non-divisibility when nonzero
    bool exact() const { return remainder.is_zero(); }
};

inline MultiPoly::DivisionOutcome MultiPoly::divide(const MultiPoly& g) const {
    check_same_ring(g);
    if (g.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    MultiPoly f = *this;
    MultiPoly q(num_vars_), r(num_vars_);
    const Exponents& lg = g.terms_.rbegin()->first;
    const Rational& cg = g.terms_.rbegin()->second;
    while (!f.is_zero()) {
        auto lead = f.terms_.rbegin();
        const Exponents& lf = lead->first;
        bool divisible = true;
        for (int i = 0; i < num_vars_; ++i) {
            if (lf[i] < lg[i]) { divisible = false; break; }
        }
        if (divisible) {
            Exponents qe(num_vars_);
            for (int i = 0; i < num_vars_; ++i) qe[i] = lf[i] - lg[i];
            Rational qc = lead->second / cg;
            MultiPoly t = monomial(num_vars_, qe, qc);
            q.add_term(std::move(qe), qc);
            f -= t * g;
        } else {
            r.add_term(lf, lead->second);
            f.terms_.erase(std::prev(f.terms_.end()));
        }
    }
    return {std::move(q), std::move(r)};
}

// k-th elementary symmetric polynomial of the given arguments; e_0 = 1.
inline MultiPoly elementary_symmetric(int k, std::span<const MultiPoly> args) {
    if (args.empty()) throw std::invalid_argument("elementary_symmetric: no arguments");
    if (k < 0 || k > static_cast<int>(args.size()))
        throw std::out_of_range("elementary_symmetric: k out of range");
    int nv = args[0].num_vars();
    std::vector<MultiPoly> acc;
    acc.reserve(k + 1);
    acc.push_back(MultiPoly::constant(nv, Rational(1)));
    for (int j = 1; j <= k; ++j) acc.push_back(MultiPoly(nv));
    for (const auto& a : args) {
        for (int j = std::min<int>(k, static_cast<int>(acc.size()) - 1); j >= 1; --j)
            acc[j] += acc[j - 1] * a;
    }
    return acc[k];
}

} // namespace tautring
