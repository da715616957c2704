#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautring/char_class.hpp"

namespace tautring {

// Formal generator of the free tautological algebra: a kappa class, a point
// class, or (after fibre restriction) a tangent class of the fibre, each
// indexed by a normal-form monomial of H^*(BSO(2n);Q).
struct TautGenerator {
    enum class Kind { Kappa, PointClass, TangentClass };

    Kind kind = Kind::Kappa;
    ClassMonomial monomial;

    int rank() const { return monomial.rank(); }

    // kappa classes live in degree |c| - 2n; point and tangent classes in |c|
    int degree() const {
        int d = monomial.degree();
        return kind == Kind::Kappa ? d - 2 * rank() : d;
    }

    friend bool operator==(const TautGenerator& a, const TautGenerator& b) {
        return a.kind == b.kind && a.monomial == b.monomial;
    }

    std::string to_string() const {
        std::string body = CharClass::monomial_text(monomial);
        if (body.empty()) body = "1";
        switch (kind) {
            case Kind::Kappa: return "kappa[" + body + "]";
            case Kind::PointClass: return body;
            case Kind::TangentClass: return body + "(TN)";
        }
        return body;
    }

    std::string to_latex() const {
        std::string body = CharClass::monomial_latex(monomial);
        if (body.empty()) body = "1";
        switch (kind) {
            case Kind::Kappa: return "\\kappa_{" + body + "}";
            case Kind::PointClass: return body;
            case Kind::TangentClass: return body + "(TN)";
        }
        return body;
    }
};

// kappa rows sort before point-class rows, then by the basis order
struct TautGeneratorLess {
    bool operator()(const TautGenerator& a, const TautGenerator& b) const {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return BasisLess{}(a.monomial, b.monomial);
    }
};

// Element of the free commutative algebra on TautGenerators, with exact
// rational coefficients. Keys are sorted multisets of (generator, power).
class TautPoly {
public:
    using Monomial = std::vector<std::pair<TautGenerator, int>>;

    // lexicographic on (generator, power); a proper prefix sorts after its
    // extensions so kappa terms render before bare constants
    struct MonomialLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
                if (TautGeneratorLess{}(a[i].first, b[i].first)) return true;
                if (TautGeneratorLess{}(b[i].first, a[i].first)) return false;
                if (a[i].second != b[i].second) return a[i].second < b[i].second;
            }
            return a.size() > b.size();
        }
    };

    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    TautPoly() = default;

    static TautPoly constant(Rational c) {
        TautPoly p;
        p.add_term({}, std::move(c));
        return p;
    }

    static TautPoly generator(TautGenerator g, Rational c = Rational(1)) {
        TautPoly p;
        p.add_term({{std::move(g), 1}}, std::move(c));
        return p;
    }

    // Linear embedding of a characteristic class: each normal-form monomial
    // becomes a single generator of the given kind; the unit embeds as a
    // scalar, so constants like q_{0,1} = 3 stay plain numbers.
    static TautPoly from_char_class(const CharClass& c, TautGenerator::Kind kind) {
        TautPoly p;
        for (const auto& [m, coeff] : c.terms()) {
            if (m.is_unit()) p.add_term({}, coeff);
            else p.add_term({{TautGenerator{kind, m}, 1}}, coeff);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    friend bool operator==(const TautPoly& a, const TautPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TautPoly& a, const TautPoly& b) { return !(a == b); }

    friend TautPoly operator+(const TautPoly& a, const TautPoly& b) {
        TautPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend TautPoly operator-(const TautPoly& a, const TautPoly& b) {
        TautPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend TautPoly operator*(const Rational& c, const TautPoly& p) {
        TautPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    friend TautPoly operator*(const TautPoly& a, const TautPoly& b) {
        TautPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(merge(ma, mb), ca * cb);
        return r;
    }

    TautPoly& operator+=(const TautPoly& o) { *this = *this + o; return *this; }
    TautPoly& operator-=(const TautPoly& o) { *this = *this - o; return *this; }

    // substitute each generator variable; used by fibre restriction
    template <typename F>
    TautPoly map_generators(F&& image_of) const {
        TautPoly r;
        for (const auto& [m, c] : terms_) {
            TautPoly t = constant(c);
            for (const auto& [g, e] : m) {
                TautPoly img = image_of(g);
                for (int k = 0; k < e; ++k) t = t * img;
            }
            r += t;
        }
        return r;
    }

    bool is_homogeneous_of_degree(int degree) const {
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (const auto& [g, e] : m) d += g.degree() * e;
            if (d != degree) return false;
        }
        return true;
    }

    std::string to_string() const { return render(false); }
    std::string to_latex() const { return render(true); }

private:
    TermMap terms_;

    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (const auto& [g, e] : b) {
            bool found = false;
            for (auto& [mg, me] : m) {
                if (mg == g) { me += e; found = true; break; }
            }
            if (!found) m.emplace_back(g, e);
        }
        sort_monomial(m);
        return m;
    }

    static void sort_monomial(Monomial& m) {
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) {
            return TautGeneratorLess{}(a.first, b.first);
        });
    }

    void add_term(Monomial m, Rational c) {
        if (c.is_zero()) return;
        sort_monomial(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string render(bool latex) const {
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
            std::string vars;
            for (const auto& [g, e] : m) {
                if (!vars.empty() && !latex) vars += "*";
                vars += latex ? g.to_latex() : g.to_string();
                if (e > 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty()) out += mag.to_string();
            else if (mag == Rational(1)) out += vars;
            else out += mag.to_string() + (latex ? "" : "*") + vars;
        }
        return out;
    }
};

} // namespace tautring
