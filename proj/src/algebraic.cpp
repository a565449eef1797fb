#include "teichfuchs/algebraic.hpp"

namespace teichfuchs {

namespace {

std::pair<QuadNum, QuadNum> minpoly_coeffs(const AlgebraicPoint& pt) {
    if (pt.minpoly.deg() != 2 || !pt.minpoly.lc().is_one())
        throw Error("quotient algebra needs a monic degree-2 minpoly");
    return {pt.minpoly[0], pt.minpoly[1]};
}

}  // namespace

QuotElem quot_embed(const QuadNum& v, const AlgebraicPoint& pt) {
    auto [p0, p1] = minpoly_coeffs(pt);
    return QuotElem::scalar(v, p0, p1);
}

QuotElem quot_theta(const AlgebraicPoint& pt) {
    auto [p0, p1] = minpoly_coeffs(pt);
    return QuotElem::theta(p0, p1);
}

QuotElem eval_at_algebraic(const PolyQ& f, const AlgebraicPoint& pt) {
    QuotElem th = quot_theta(pt);
    return eval_map(f, th, [&](const QuadNum& v) { return quot_embed(v, pt); });
}

QuotElem eval_at_algebraic(const RationalFunction& f, const AlgebraicPoint& pt) {
    if (factor_multiplicity(f.den(), pt.minpoly) > 0) throw PoleAtPoint();
    return eval_at_algebraic(f.num(), pt) / eval_at_algebraic(f.den(), pt);
}

std::optional<std::vector<QuadNum>> split_quadratic(const PolyQ& f) {
    if (f.deg() == 1) return std::vector<QuadNum>{-f[0] / f[1]};
    if (f.deg() != 2) return std::nullopt;
    QuadNum a = f[2], b = f[1], c = f[0];
    QuadNum disc = b * b - QuadNum::integer(4, b.disc()) * a * c;
    QuadNum s;
    if (!sqrt_in_field(disc, s)) return std::nullopt;
    QuadNum two_a = a + a;
    return std::vector<QuadNum>{(-b + s) / two_a, (-b - s) / two_a};
}

std::vector<FactorWithMultiplicity> squarefree_multiple_roots(const PolyQ& f) {
    if (f.deg() < 1) throw Error("squarefree_multiple_roots needs degree >= 1");
    // Yun's decomposition: f = prod a_i^i over a field of characteristic zero
    std::vector<PolyQ> classes;  // classes[i] = squarefree product of multiplicity-(i+1) roots
    PolyQ g0 = gcd(f, derivative(f));
    PolyQ w = exact_div(monic(f), g0);
    PolyQ g = g0;
    while (w.deg() > 0) {
        PolyQ y = gcd(w, g);
        classes.push_back(exact_div(w, y));
        w = y;
        g = exact_div(g, y);
    }
    std::vector<FactorWithMultiplicity> out;
    for (size_t i = 0; i < classes.size(); ++i) {
        PolyQ part = classes[i];
        if (part.deg() < 1) continue;
        int mult = (int)i + 1;
        if (part.deg() <= 2) {
            if (auto roots = split_quadratic(part)) {
                for (auto& r : *roots) out.push_back({r, mult});
            } else {
                out.push_back({AlgebraicPoint{monic(part)}, mult});
            }
        } else {
            if (mult >= 2) throw UnsplittableFactor();
            // Simple part of degree >= 3: roots are only reported when linear or
            // quadratic pieces can be split off, which is out of scope here.
        }
    }
    return out;
}

bool reciprocal_check(const PolyQ& c, int w) {
    if (c.is_zero()) return true;
    // t^w * c(1/t) has coefficient of t^j equal to c_{w-j}
    if (c.deg() > w) return false;
    long D = c.c.front().disc();
    for (int j = 0; j <= w; ++j) {
        QuadNum lhs = (w - j) <= c.deg() ? c[(size_t)(w - j)] : QuadNum::zero(D);
        QuadNum rhs = j <= c.deg() ? c[(size_t)j] : QuadNum::zero(D);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace teichfuchs
