#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautring/localization.hpp"
#include "tautring/taut_ring.hpp"

namespace tautring {

// Builders cap the torus rank so the common-denominator expansion in the
// localization sums stays tractable.
inline constexpr int kMaxBuilderRank = 6;

// S^{2k} with the standard torus action: fixed points 0 and infinity, the
// representation at infinity carrying the opposite orientation.
inline TorusManifold sphere(int k) {
    if (k < 1) throw std::invalid_argument("sphere: k must be >= 1");
    if (k > kMaxBuilderRank) throw std::invalid_argument("sphere: rank cap exceeded");
    TorusManifold M;
    M.name = "S" + std::to_string(2 * k);
    M.n = k;
    OrientedRep at_zero = OrientedRep::standard(k);
    OrientedRep at_inf = at_zero;
    at_inf.sign = -1;
    M.fixed_points.push_back({"0", std::move(at_zero)});
    M.fixed_points.push_back({"inf", std::move(at_inf)});
    M.m0 = 0;
    M.m1 = 1;
    return M;
}

// Product torus manifold: all pairs of fixed points, weights concatenated
// (B's variables shifted past A's), orientation signs multiplied.
// m0 = (m0_A, m0_B) and m1 = (m0_A, m1_B) when B has an m1.
inline TorusManifold product(const TorusManifold& A, const TorusManifold& B) {
    A.validate();
    B.validate();
    int n = A.n + B.n;
    if (n > kMaxBuilderRank) throw std::invalid_argument("product: rank cap exceeded");
    TorusManifold M;
    M.name = A.name + "x" + B.name;
    M.n = n;
    for (size_t ia = 0; ia < A.fixed_points.size(); ++ia) {
        for (size_t ib = 0; ib < B.fixed_points.size(); ++ib) {
            const auto& fa = A.fixed_points[ia];
            const auto& fb = B.fixed_points[ib];
            OrientedRep rep;
            rep.n = n;
            rep.sign = fa.rep.sign * fb.rep.sign;
            for (const auto& w : fa.rep.weights) {
                std::vector<long long> v(n, 0);
                std::copy(w.begin(), w.end(), v.begin());
                rep.weights.push_back(std::move(v));
            }
            for (const auto& w : fb.rep.weights) {
                std::vector<long long> v(n, 0);
                std::copy(w.begin(), w.end(), v.begin() + A.n);
                rep.weights.push_back(std::move(v));
            }
            M.fixed_points.push_back({"(" + fa.label + "," + fb.label + ")", std::move(rep)});
        }
    }
    auto pair_index = [&](int ia, int ib) {
        return ia * static_cast<int>(B.fixed_points.size()) + ib;
    };
    M.m0 = pair_index(A.m0, B.m0);
    if (B.m1) M.m1 = pair_index(A.m0, *B.m1);
    return M;
}

// CP^n with the torus action [z_0 : z_1 : ... : z_n] -> [z_0 : xi_1 z_1 : ... ].
// Fixed point i has weights {x_j - x_i : j != i} with x_0 = 0; the complex
// structure orients every tangent representation positively.
inline TorusManifold projective_space(int n) {
    if (n < 1) throw std::invalid_argument("projective_space: n must be >= 1");
    if (n > kMaxBuilderRank) throw std::invalid_argument("projective_space: rank cap exceeded");
    TorusManifold M;
    M.name = "CP" + std::to_string(n);
    M.n = n;
    for (int i = 0; i <= n; ++i) {
        OrientedRep rep;
        rep.n = n;
        rep.sign = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<long long> w(n, 0);
            if (j >= 1) w[j - 1] += 1;
            if (i >= 1) w[i - 1] -= 1;
            rep.weights.push_back(std::move(w));
        }
        std::string label = "[";
        for (int j = 0; j <= n; ++j) {
            label += (j == i ? "1" : "0");
            if (j < n) label += ":";
        }
        label += "]";
        M.fixed_points.push_back({std::move(label), std::move(rep)});
    }
    M.m0 = 0;
    M.m1 = 1;
    return M;
}

struct MaximalTorusCheck {
    bool ok = true;
    int zero_weight_index = -1; // offending weight at m0 when not maximal

    explicit operator bool() const { return ok; }
};

// The chart action is a maximal torus inclusion iff m0 is isolated, i.e.
// iff every weight of the chart representation is nonzero.
inline MaximalTorusCheck validate_maximal_torus(const TorusManifold& M) {
    M.validate();
    if (auto idx = M.chart_rep().zero_weight_index())
        return {false, *idx};
    return {};
}

enum class TransportStatus { Transported, Unavailable, MissingM1 };

struct TransportResult {
    TransportStatus status = TransportStatus::Transported;
    CharClass value; // r_c, when transported
    std::optional<WeylGenerator> witness;

    explicit TransportResult(int n) : value(n) {}
    bool ok() const { return status == TransportStatus::Transported; }
};

// r_c: the point class c evaluated at m1 and re-expressed at the chart.
// The identification runs through the orientation-reversed chart, so one
// conjugation is applied after the basis rewriting; for product spheres the
// reversed orientation at m1 cancels it and the transport is c -> c.
inline TransportResult point_class_transport(const TorusManifold& M, const CharClass& c) {
    M.validate();
    TransportResult out(M.n);
    if (!M.m1) {
        out.status = TransportStatus::MissingM1;
        return out;
    }
    const OrientedRep& rep = M.fixed_points[*M.m1].rep;
    if (!rep.is_isolated()) {
        out.status = TransportStatus::Unavailable;
        return out;
    }
    auto pe = to_pe_basis(c.eval(rep), WeylContext{M.n});
    if (!pe.ok()) {
        out.status = TransportStatus::Unavailable;
        out.witness = pe.witness;
        return out;
    }
    out.value = pe.value->conjugate();
    return out;
}

enum class PointClassStatus { Transported, Unavailable };

// The connected-sum comparison homomorphism as a generator table: every
// basis monomial up to max_degree contributes a kappa row (when its kappa
// class has degree >= 0) and, when transport succeeds, a point-class row.
struct GeneratorMap {
    std::string source;
    std::string target;
    int n = 1;
    int max_degree = 0;
    std::map<TautGenerator, TautPoly, TautGeneratorLess> entries;
    PointClassStatus point_class_status = PointClassStatus::Transported;
    std::string unavailable_reason;
};

// kappa_{p_I} -> kappa_{p_I} + q_{p_I}
// kappa_{e p_I} -> kappa_{e p_I} + q_{e p_I} - 2 p_I
// c -> r_c (dropped, with status Unavailable, when some transport fails)
inline GeneratorMap connected_sum_hom(const TorusManifold& M, int max_degree) {
    M.validate();
    auto maximal = validate_maximal_torus(M);
    if (!maximal.ok)
        throw std::invalid_argument(
            "connected_sum_hom: chart point is not isolated (weight " +
            std::to_string(maximal.zero_weight_index) + " vanishes)");

    GeneratorMap g;
    g.source = M.name + " # N";
    g.target = "N";
    g.n = M.n;
    g.max_degree = max_degree;

    const int n = M.n;
    auto basis = monomial_basis(n, max_degree);

    // point classes first, so an unavailable transport drops those rows
    std::map<TautGenerator, TautPoly, TautGeneratorLess> point_rows;
    bool transported = true;
    for (const auto& m : basis) {
        if (m.is_unit()) continue;
        auto r = point_class_transport(M, CharClass::from_monomial(n, m));
        if (!r.ok()) {
            transported = false;
            g.unavailable_reason =
                r.status == TransportStatus::MissingM1
                    ? "manifold has no retained point m1"
                    : "classes at m1 are not expressible at m0" +
                          (r.witness ? " (not invariant under " + r.witness->describe() + ")"
                                     : std::string());
            break;
        }
        point_rows.emplace(TautGenerator{TautGenerator::Kind::PointClass, m},
                           TautPoly::from_char_class(r.value, TautGenerator::Kind::PointClass));
    }

    for (const auto& m : basis) {
        TautGenerator gen{TautGenerator::Kind::Kappa, m};
        if (gen.degree() < 0) continue; // kappa of |c| < 2n vanishes identically
        auto q = kappa_pullback(M, CharClass::from_monomial(n, m));
        if (!q.ok())
            throw std::runtime_error("connected_sum_hom: localization failed for kappa[" +
                                     CharClass::monomial_text(m) + "]: " + to_string(q.status));
        TautPoly image = TautPoly::generator(gen) +
                         TautPoly::from_char_class(q.value, TautGenerator::Kind::PointClass);
        if (m.e_exp == 1) {
            ClassMonomial p_part{0, m.p_exp};
            image -= Rational(2) * TautPoly::from_char_class(
                                       CharClass::from_monomial(n, p_part),
                                       TautGenerator::Kind::PointClass);
        }
        g.entries.emplace(std::move(gen), std::move(image));
    }

    if (transported) {
        g.point_class_status = PointClassStatus::Transported;
        g.entries.insert(point_rows.begin(), point_rows.end());
    } else {
        g.point_class_status = PointClassStatus::Unavailable;
    }
    return g;
}

// The variant homomorphism from choosing the oriented-isomorphic retained
// point: point-class images are conjugated, kappa rows are untouched.
inline GeneratorMap conjugated_hom(const GeneratorMap& g) {
    if (g.point_class_status != PointClassStatus::Transported)
        throw std::invalid_argument("conjugated_hom: point classes unavailable");
    GeneratorMap out = g;
    for (auto& [gen, image] : out.entries) {
        if (gen.kind != TautGenerator::Kind::PointClass) continue;
        TautPoly conj;
        for (const auto& [mono, coeff] : image.terms()) {
            int e_total = 0;
            for (const auto& [var, exp] : mono) e_total += var.monomial.e_exp * exp;
            TautPoly term = TautPoly::constant(e_total % 2 ? -coeff : coeff);
            for (const auto& [var, exp] : mono) {
                for (int k = 0; k < exp; ++k) term = term * TautPoly::generator(var);
            }
            conj += term;
        }
        image = std::move(conj);
    }
    return out;
}

// Post-composition with restriction to the fibre: kappa generators die,
// point classes become tangent classes of N.
struct RestrictionTable {
    std::string source;
    int n = 1;
    int max_degree = 0;
    std::map<TautGenerator, TautPoly, TautGeneratorLess> entries;
};

inline RestrictionTable fiber_restriction(const GeneratorMap& g) {
    RestrictionTable out;
    out.source = g.source;
    out.n = g.n;
    out.max_degree = g.max_degree;
    for (const auto& [gen, image] : g.entries) {
        TautPoly restricted = image.map_generators([](const TautGenerator& var) {
            switch (var.kind) {
                case TautGenerator::Kind::Kappa:
                    return TautPoly(); // zero
                case TautGenerator::Kind::PointClass:
                    return TautPoly::generator(
                        TautGenerator{TautGenerator::Kind::TangentClass, var.monomial});
                case TautGenerator::Kind::TangentClass:
                    return TautPoly::generator(var);
            }
            return TautPoly();
        });
        out.entries.emplace(gen, std::move(restricted));
    }
    return out;
}

struct SphereLemmaCheck {
    ClassMonomial input;
    CharClass expected;
    CharClass got;
    bool pass = false;
};

struct SphereLemmaReport {
    int n = 1;
    int max_degree = 0;
    std::vector<SphereLemmaCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks) if (!c.pass) return false;
        return true;
    }
};

// Checks kappa_pullback(p_I) = 0 and kappa_pullback(e p_I) = 2 p_I over the
// built-in S^{2n} fixed-point data for every basis monomial up to max_degree.
inline SphereLemmaReport verify_sphere_lemma(int n, int max_degree) {
    TorusManifold S = sphere(n);
    SphereLemmaReport report;
    report.n = n;
    report.max_degree = max_degree;
    for (const auto& m : monomial_basis(n, max_degree)) {
        SphereLemmaCheck check{m, CharClass(n), CharClass(n), false};
        if (m.e_exp == 0) {
            check.expected = CharClass::zero(n);
        } else {
            check.expected =
                Rational(2) * CharClass::from_monomial(n, ClassMonomial{0, m.p_exp});
        }
        auto q = kappa_pullback(S, CharClass::from_monomial(n, m));
        if (q.ok()) {
            check.got = q.value;
            check.pass = check.got == check.expected;
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace tautring
