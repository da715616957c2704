#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/symmetric.hpp"

namespace tautring {

struct FixedPoint {
    std::string label;
    OrientedRep rep; // tangent representation at the point
};

// Fixed-point data of a torus manifold: rank n, dimension 2n, a nonempty
// list of labelled fixed points, a chart point m0 and an optional retained
// point m1 (used for point-class transport).
struct TorusManifold {
    std::string name;
    int n = 1;
    std::vector<FixedPoint> fixed_points;
    int m0 = 0;
    std::optional<int> m1;

    void validate() const {
        if (n < 1) throw std::invalid_argument("TorusManifold: rank must be >= 1");
        if (fixed_points.empty())
            throw std::invalid_argument("TorusManifold: no fixed points");
        for (const auto& fp : fixed_points) {
            if (fp.rep.n != n)
                throw std::invalid_argument("TorusManifold: fixed-point rank mismatch");
            fp.rep.validate();
        }
        if (m0 < 0 || m0 >= static_cast<int>(fixed_points.size()))
            throw std::invalid_argument("TorusManifold: m0 out of range");
        if (m1) {
            if (*m1 < 0 || *m1 >= static_cast<int>(fixed_points.size()))
                throw std::invalid_argument("TorusManifold: m1 out of range");
            if (*m1 == m0)
                throw std::invalid_argument("TorusManifold: m0 and m1 must differ");
        }
    }

    const OrientedRep& chart_rep() const { return fixed_points[m0].rep; }
};

enum class LocalizationStatus {
    Ok,
    NonIsolatedFixedPoint, // some tangent Euler class is zero
    NotPolynomial,         // localized sum did not clear its denominator
    NotInvariant,          // result not expressible through BSO(2n)
};

inline std::string to_string(LocalizationStatus s) {
    switch (s) {
        case LocalizationStatus::Ok: return "ok";
        case LocalizationStatus::NonIsolatedFixedPoint: return "non-isolated-fixed-point";
        case LocalizationStatus::NotPolynomial: return "not-polynomial";
        case LocalizationStatus::NotInvariant: return "not-invariant";
    }
    return "unknown";
}

struct FibreIntegral {
    LocalizationStatus status = LocalizationStatus::Ok;
    MultiPoly value;      // the integral, when status == Ok
    MultiPoly remainder;  // witness when status == NotPolynomial
    std::string offending_point; // label when status == NonIsolatedFixedPoint

    explicit FibreIntegral(int n) : value(n), remainder(n) {}
    bool ok() const { return status == LocalizationStatus::Ok; }
};

// Fixed-point localization of the fibre integral: sum of t|_{x_j} / e_j over
// the isolated fixed points, computed over the single common denominator
// prod_j e_j followed by one exact division. A nonzero remainder means the
// input data does not come from a genuine closed manifold; it is reported as
// a diagnostic, not an assertion failure.
inline FibreIntegral fibre_integrate(const TorusManifold& M, const CharClass& c) {
    M.validate();
    if (c.rank() != M.n)
        throw std::invalid_argument("fibre_integrate: class rank mismatch");

    FibreIntegral out(M.n);
    for (const auto& fp : M.fixed_points) {
        if (!fp.rep.is_isolated()) {
            out.status = LocalizationStatus::NonIsolatedFixedPoint;
            out.offending_point = fp.label;
            return out;
        }
    }

    const size_t r = M.fixed_points.size();
    std::vector<MultiPoly> eulers;
    eulers.reserve(r);
    for (const auto& fp : M.fixed_points) eulers.push_back(euler_of_rep(fp.rep));

    // prefix/suffix products give each prod_{k != j} e_k in O(r) multiplies
    std::vector<MultiPoly> prefix(r + 1, MultiPoly::constant(M.n, Rational(1)));
    std::vector<MultiPoly> suffix(r + 1, MultiPoly::constant(M.n, Rational(1)));
    for (size_t j = 0; j < r; ++j) prefix[j + 1] = prefix[j] * eulers[j];
    for (size_t j = r; j-- > 0;) suffix[j] = suffix[j + 1] * eulers[j];

    MultiPoly numerator(M.n);
    for (size_t j = 0; j < r; ++j)
        numerator += c.eval(M.fixed_points[j].rep) * prefix[j] * suffix[j + 1];

    const MultiPoly& denominator = prefix[r];
    auto division = numerator.divide(denominator);
    if (!division.exact()) {
        out.status = LocalizationStatus::NotPolynomial;
        out.remainder = std::move(division.remainder);
        return out;
    }
    out.value = std::move(division.quotient);
    return out;
}

struct PullbackResult {
    LocalizationStatus status = LocalizationStatus::Ok;
    CharClass value;     // q_c in the (e, p) basis, when status == Ok
    MultiPoly remainder; // NotPolynomial witness
    std::string offending_point;
    std::optional<WeylGenerator> witness; // NotInvariant witness

    explicit PullbackResult(int n) : value(n), remainder(n) {}
    bool ok() const { return status == LocalizationStatus::Ok; }
};

// q_c: the localized integral rewritten in the (e, p) basis of the chart
// representation at m0. For homogeneous c this has degree |c| - 2n.
inline PullbackResult kappa_pullback(const TorusManifold& M, const CharClass& c) {
    PullbackResult out(M.n);
    FibreIntegral integral = fibre_integrate(M, c);
    if (!integral.ok()) {
        out.status = integral.status;
        out.remainder = std::move(integral.remainder);
        out.offending_point = std::move(integral.offending_point);
        return out;
    }
    auto pe = to_pe_basis(integral.value, WeylContext{M.n});
    if (!pe.ok()) {
        out.status = LocalizationStatus::NotInvariant;
        out.witness = pe.witness;
        return out;
    }
    out.value = std::move(*pe.value);
    return out;
}

struct EulerCharacteristic {
    LocalizationStatus status = LocalizationStatus::Ok;
    Rational value;
    bool matches_count = false; // integral equals the number of fixed points

    bool ok() const { return status == LocalizationStatus::Ok; }
};

// chi(M) = integral of the tangent Euler class = sum_j e_j/e_j.
inline EulerCharacteristic euler_characteristic(const TorusManifold& M) {
    EulerCharacteristic out;
    FibreIntegral integral = fibre_integrate(M, CharClass::euler(M.n));
    if (!integral.ok()) {
        out.status = integral.status;
        return out;
    }
    if (!integral.value.is_zero() && integral.value.total_degree() != 0) {
        out.status = LocalizationStatus::NotPolynomial;
        return out;
    }
    out.value = integral.value.constant_term();
    out.matches_count =
        out.value == Rational(static_cast<long long>(M.fixed_points.size()));
    return out;
}

} // namespace tautring
