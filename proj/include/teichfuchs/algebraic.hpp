#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "teichfuchs/ratfun.hpp"

namespace teichfuchs {

/// A point with monic minimal polynomial of degree 1 or 2 over Q(sqrt D).
/// Degree-2 minpolys are kept unsplit; arithmetic "at" the point happens in
/// the quotient algebra Q(sqrt D)[t]/(minpoly).
struct AlgebraicPoint {
    PolyQ minpoly;

    int degree() const { return minpoly.deg(); }
    friend bool operator==(const AlgebraicPoint&, const AlgebraicPoint&) = default;
};

/// Element c0 + c1*theta of Q(sqrt D)[theta]/(theta^2 + p1 theta + p0).
/// Carries the defining quadratic so values are self-contained.
struct QuotElem {
    QuadNum c0, c1;
    QuadNum p0, p1;

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_scalar() const { return c1.is_zero(); }

    static QuotElem scalar(const QuadNum& v, const QuadNum& p0, const QuadNum& p1) {
        return {v, QuadNum::zero(v.disc()), p0, p1};
    }
    static QuotElem theta(const QuadNum& p0, const QuadNum& p1) {
        return {QuadNum::zero(p0.disc()), QuadNum::one(p0.disc()), p0, p1};
    }

    QuotElem operator-() const { return {-c0, -c1, p0, p1}; }
    friend QuotElem operator+(const QuotElem& x, const QuotElem& y) {
        return {x.c0 + y.c0, x.c1 + y.c1, x.p0, x.p1};
    }
    friend QuotElem operator-(const QuotElem& x, const QuotElem& y) {
        return {x.c0 - y.c0, x.c1 - y.c1, x.p0, x.p1};
    }
    QuotElem& operator+=(const QuotElem& y) { return *this = *this + y; }
    QuotElem& operator-=(const QuotElem& y) { return *this = *this - y; }
    friend QuotElem operator*(const QuotElem& x, const QuotElem& y) {
        // (a + b th)(c + d th) with th^2 = -p1 th - p0
        QuadNum bd = x.c1 * y.c1;
        return {x.c0 * y.c0 - bd * x.p0, x.c0 * y.c1 + x.c1 * y.c0 - bd * x.p1, x.p0, x.p1};
    }
    QuotElem inv() const {
        // solve (c0 + c1 th)(d0 + d1 th) = 1
        // d0 c0 - d1 c1 p0 = 1 ;  d0 c1 + d1 (c0 - c1 p1) = 0
        QuadNum det = c0 * (c0 - c1 * p1) + c1 * c1 * p0;
        if (det.is_zero()) throw DivisionByZero("quotient algebra inverse of zero divisor");
        QuadNum d0 = (c0 - c1 * p1) / det;
        QuadNum d1 = -c1 / det;
        return {d0, d1, p0, p1};
    }
    friend QuotElem operator/(const QuotElem& x, const QuotElem& y) { return x * y.inv(); }
    friend bool operator==(const QuotElem& x, const QuotElem& y) {
        return x.c0 == y.c0 && x.c1 == y.c1;
    }
};

QuotElem quot_embed(const QuadNum& v, const AlgebraicPoint& pt);
QuotElem quot_theta(const AlgebraicPoint& pt);

/// Image of a polynomial in the quotient algebra at pt (degree-2 minpoly).
QuotElem eval_at_algebraic(const PolyQ& f, const AlgebraicPoint& pt);
/// Image of a rational function; throws PoleAtPoint if minpoly divides den.
QuotElem eval_at_algebraic(const RationalFunction& f, const AlgebraicPoint& pt);

/// A root in Q(sqrt D) or an unsplit conjugate pair.
using RootOrPoint = std::variant<QuadNum, AlgebraicPoint>;

struct FactorWithMultiplicity {
    RootOrPoint where;
    int multiplicity = 1;
};

/// gcd-based squarefree decomposition with quadratic-field root extraction.
/// Factors of degree <= 2 are split over Q(sqrt D) when possible; irreducible
/// quadratics come back as AlgebraicPoints. A repeated factor of degree >= 3
/// irreducible over the field raises UnsplittableFactor. Simple roots are
/// reported only when the squarefree part splits into pieces of degree <= 2.
std::vector<FactorWithMultiplicity> squarefree_multiple_roots(const PolyQ& f);

/// Roots of a monic polynomial of degree <= 2 over Q(sqrt D), if it splits.
std::optional<std::vector<QuadNum>> split_quadratic(const PolyQ& f);

/// True iff t^w * c(1/t) = c(t).
bool reciprocal_check(const PolyQ& c, int w);

}  // namespace teichfuchs
