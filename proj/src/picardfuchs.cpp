#include "teichfuchs/picardfuchs.hpp"

#include <algorithm>

#include "teichfuchs/resultant.hpp"

namespace teichfuchs {

namespace {

using XPoly = Poly<PolyQ>;  // polynomial in x with K[t] coefficients

XPoly xpoly_of(const FamilyModel& fm) {
    XPoly g;
    for (const auto& ck : fm.c) g.c.push_back(ck);
    g.trim();
    return g;
}

XPoly deriv_x(const XPoly& f) { return derivative(f); }

XPoly deriv_t(const XPoly& f) {
    XPoly r;
    for (const auto& c : f.c) r.c.push_back(derivative(c));
    r.trim();
    return r;
}

XPoly scal(const XPoly& f, const QuadNum& v) { return f * PolyQ::constant(v); }

/// Division by a monic-in-x divisor needs no coefficient inversion.
std::pair<XPoly, XPoly> divmod_monic_x(XPoly f, const XPoly& g) {
    if (g.is_zero() || g.lc().deg() != 0 || !g.lc().lc().is_one())
        throw Error("divmod_monic_x: divisor must be monic in x");
    XPoly q;
    while (!f.is_zero() && f.deg() >= g.deg()) {
        PolyQ coef = f.lc();
        size_t d = (size_t)(f.deg() - g.deg());
        if (q.c.size() <= d) q.c.resize(d + 1);
        q.c[d] += coef;
        for (size_t i = 0; i < g.c.size(); ++i) f.c[d + i] -= coef * g.c[i];
        f.trim();
    }
    q.trim();
    return {q, f};
}

struct Bezout {
    XPoly U, V;
    PolyQ r;  // U g + V gx = r(t)
};

Bezout bezout_pair(const XPoly& g, const XPoly& gx, long D) {
    XPoly R0 = g, R1 = gx;
    XPoly S0 = XPoly::constant(PolyQ::constant(QuadNum::one(D))), S1;
    XPoly T0, T1 = XPoly::constant(PolyQ::constant(QuadNum::one(D)));
    while (!R1.is_zero() && R1.deg() > 0) {
        // pseudo-division with multiplier alpha = lc(R1)^(deg R0 - deg R1 + 1)
        int e = R0.deg() - R1.deg() + 1;
        XPoly A = R0, Q;
        int steps = 0;
        while (!A.is_zero() && A.deg() >= R1.deg()) {
            PolyQ s = A.lc();
            size_t d = (size_t)(A.deg() - R1.deg());
            A = A * R1.lc() - detail::shifted(R1, d) * s;
            Q = Q * R1.lc();
            if (Q.c.size() <= d) Q.c.resize(d + 1);
            Q.c[d] += s;
            Q.trim();
            ++steps;
        }
        PolyQ alpha = PolyQ::constant(QuadNum::one(D));
        for (int i = 0; i < e; ++i) alpha = alpha * R1.lc();
        for (int i = 0; i < e - steps; ++i) {
            A = A * R1.lc();
            Q = Q * R1.lc();
        }
        XPoly R2 = A;
        XPoly S2 = S0 * alpha - Q * S1;
        XPoly T2 = T0 * alpha - Q * T1;
        R0 = R1;
        S0 = S1;
        T0 = T1;
        R1 = R2;
        S1 = S2;
        T1 = T2;
    }
    if (R1.is_zero()) throw SingularFiber("generic fiber is singular: gcd(g, g_x) != 1");
    Bezout bz;
    bz.r = R1.c[0];
    bz.U = S1;
    bz.V = T1;
    // strip the common polynomial content
    PolyQ cont = bz.r;
    for (const XPoly* m : {&bz.U, &bz.V})
        for (const auto& c : m->c) {
            if (cont.deg() == 0) break;
            if (!c.is_zero()) cont = gcd(cont, c);
        }
    if (cont.deg() > 0) {
        bz.r = exact_div(bz.r, cont);
        for (XPoly* m : {&bz.U, &bz.V})
            for (auto& c : m->c) c = c.is_zero() ? c : exact_div(c, cont);
    }
    return bz;
}

struct RawClass {
    std::array<PolyQ, 4> num;
    PolyQ den;
};

/// Reduce (P/den) dx/y^m modulo exact forms, keeping one scalar denominator.
RawClass dr_reduce_raw(XPoly P, PolyQ den, int m, const XPoly& g, const XPoly& gx,
                       const Bezout& bz, long D) {
    while (m >= 3) {
        // P = [(P U + Q gx)/r] g + [R/r] gx  with  P V = Q g + R
        auto [Q, R] = divmod_monic_x(P * bz.V, g);
        XPoly A = P * bz.U + Q * gx;
        // (P/den)/y^m == [A + 2/(m-2) dR/dx] / (r den) / y^{m-2}
        QuadNum c(rat(2, m - 2), rat(0), D);
        P = A + scal(deriv_x(R), c);
        den = den * bz.r;
        m -= 2;
    }
    // m = 1: relations x^a g_x/2 + a x^{a-1} g = d(x^a y) kill degrees >= 4
    while (!P.is_zero() && P.deg() >= 4) {
        int a = P.deg() - 4;
        XPoly rel = scal(detail::shifted(gx, (size_t)a), QuadNum(rat(1, 2), rat(0), D));
        if (a >= 1) rel = rel + scal(detail::shifted(g, (size_t)(a - 1)), QuadNum::integer(a, D));
        // leading coefficient of rel is the constant 5/2 + a (g monic quintic)
        const PolyQ& lead = rel.lc();
        if (lead.deg() != 0) throw Error("dr_reduce: unexpected relation shape");
        PolyQ coef = P.lc() * lead[0].inv();
        P = P - rel * coef;
    }
    RawClass out;
    out.den = den;
    for (size_t i = 0; i < 4; ++i) out.num[i] = i < P.c.size() ? P.c[i] : PolyQ{};
    return out;
}

H1Class to_h1(const RawClass& rc) {
    H1Class h;
    for (size_t i = 0; i < 4; ++i) h[i] = RationalFunction(rc.num[i], rc.den);
    return h;
}

struct GaussManinRaw {
    RawClass w0, w1, w2;
};

GaussManinRaw gauss_manin_raw(const FamilyModel& fm, int i) {
    long D = fm.D;
    XPoly g = xpoly_of(fm);
    XPoly gx = deriv_x(g);
    XPoly gt = deriv_t(g);
    XPoly gtt = deriv_t(gt);
    Bezout bz = bezout_pair(g, gx, D);
    PolyQ one = PolyQ::constant(QuadNum::one(D));
    XPoly xi;  // x^{i-1}
    xi.c.assign((size_t)i, PolyQ{});
    xi.c[(size_t)(i - 1)] = one;
    GaussManinRaw out;
    out.w0 = dr_reduce_raw(xi, one, 1, g, gx, bz, D);
    out.w1 = dr_reduce_raw(scal(gt * xi, QuadNum(rat(-1, 2), rat(0), D)), one, 3, g, gx, bz, D);
    RawClass p5 = dr_reduce_raw(scal(gt * gt * xi, QuadNum(rat(3, 4), rat(0), D)), one, 5, g, gx,
                                bz, D);
    RawClass p3 = dr_reduce_raw(scal(gtt * xi, QuadNum(rat(-1, 2), rat(0), D)), one, 3, g, gx, bz,
                                D);
    RawClass w2;
    w2.den = p5.den * p3.den;
    for (size_t k = 0; k < 4; ++k) w2.num[k] = p5.num[k] * p3.den + p3.num[k] * p5.den;
    out.w2 = w2;
    return out;
}

}  // namespace

H1Class dr_reduce(const std::vector<RationalFunction>& P, int m, const FamilyModel& fm) {
    if (m % 2 == 0 || m < 1 || m > 5) throw Error("dr_reduce: m must be 1, 3 or 5");
    long D = fm.D;
    XPoly g = xpoly_of(fm);
    XPoly gx = deriv_x(g);
    Bezout bz = bezout_pair(g, gx, D);
    // common denominator of the rational-function coefficients
    PolyQ den = PolyQ::constant(QuadNum::one(D));
    for (const auto& c : P)
        if (!c.is_zero()) den = exact_div(den * c.den(), gcd(den, c.den()));
    XPoly num;
    for (const auto& c : P)
        num.c.push_back(c.is_zero() ? PolyQ{} : c.num() * exact_div(den, c.den()));
    num.trim();
    return to_h1(dr_reduce_raw(num, den, m, g, gx, bz, D));
}

H1Class gauss_manin(const FamilyModel& fm, int i, int order) {
    if (i != 1 && i != 2) throw Error("gauss_manin: i must be 1 or 2");
    if (order < 0 || order > 2) throw Error("gauss_manin: order must be 0, 1 or 2");
    GaussManinRaw raw = gauss_manin_raw(fm, i);
    return to_h1(order == 0 ? raw.w0 : order == 1 ? raw.w1 : raw.w2);
}

namespace {

std::pair<Rat, Rat> indicial_roots(const Rat& am1, const Rat& bm2) {
    // x(x-1) + am1 x + bm2 = 0
    Rat b = am1 - 1, c = bm2;
    Rat disc = b * b - 4 * c;
    Rat s;
    if (!rat_sqrt(disc, s)) throw IrrationalExponents();
    return {(-b + s) / 2, (-b - s) / 2};
}

Rat require_rational(const QuadNum& v) {
    if (!v.is_rational()) throw IrrationalExponents();
    return v.a();
}

Rat require_rational(const QuotElem& v) {
    if (!v.is_scalar()) throw IrrationalExponents();
    return require_rational(v.c0);
}

/// Laurent coefficient lim (t - t0)^k f at a root of the monic factor m,
/// computed in K or in the quotient algebra.
template <class S, class Emb>
S laurent_limit(const RationalFunction& f, const PolyQ& m, int k, Emb&& emb, const S& theta) {
    PolyQ den = f.den();
    int mult = factor_multiplicity(den, m);
    if (mult != k) throw Error("laurent_limit: wrong pole order");
    PolyQ h = den;
    for (int i = 0; i < k; ++i) h = exact_div(h, m);
    S num = eval_map(f.num(), theta, emb);
    S hv = eval_map(h, theta, emb);
    S mp = eval_map(derivative(m), theta, emb);
    S mpk = hv;
    // hv * mp^k
    S acc = hv;
    for (int i = 0; i < k; ++i) acc = acc * mp;
    (void)mpk;
    return num / acc;
}

int pole_order(const RationalFunction& f, const PolyQ& m) {
    return f.is_zero() ? 0 : factor_multiplicity(f.den(), m);
}

template <class S, class Emb>
std::pair<Rat, Rat> exponents_at_factor(const FuchsOp& L, const PolyQ& m, Emb&& emb,
                                        const S& theta) {
    int ordA = pole_order(L.A, m);
    int ordB = pole_order(L.B, m);
    if (ordA > 1 || ordB > 2) throw IrregularSingularity();
    Rat am1 = ordA == 1 ? require_rational(laurent_limit(L.A, m, 1, emb, theta)) : rat(0);
    Rat bm2 = ordB == 2 ? require_rational(laurent_limit(L.B, m, 2, emb, theta)) : rat(0);
    return indicial_roots(am1, bm2);
}

/// f(1/u) as a rational function in u.
RationalFunction substitute_inverse(const RationalFunction& f, long D) {
    auto rev = [](const PolyQ& p) {
        PolyQ r;
        r.c.assign(p.c.rbegin(), p.c.rend());
        r.trim();
        return r;
    };
    if (f.is_zero()) return f;
    int mdeg = f.num().deg(), ndeg = f.den().deg();
    PolyQ num = rev(f.num()), den = rev(f.den());
    int shift = ndeg - mdeg;  // f(1/u) = u^shift rev(num)/rev(den)
    PolyQ u_pow = PolyQ::constant(QuadNum::one(D));
    PolyQ t = PolyQ({QuadNum::zero(D), QuadNum::one(D)});
    for (int i = 0; i < std::abs(shift); ++i) u_pow = u_pow * t;
    if (shift >= 0) return RationalFunction(num * u_pow, den);
    return RationalFunction(num, den * u_pow);
}

}  // namespace

std::pair<RationalFunction, RationalFunction> at_infinity(const FuchsOp& L) {
    long D = L.D;
    PolyQ u = PolyQ({QuadNum::zero(D), QuadNum::one(D)});
    RationalFunction uu = RationalFunction::of(u);
    RationalFunction two = RationalFunction::constant(QuadNum::integer(2, D));
    RationalFunction Ainf = two / uu - substitute_inverse(L.A, D) / (uu * uu);
    RationalFunction Binf = substitute_inverse(L.B, D) / (uu * uu * uu * uu);
    return {Ainf, Binf};
}

std::pair<Rat, Rat> local_exponents(const FuchsOp& L, const QuadNum& t0) {
    PolyQ m = linear_root(t0);
    if (pole_order(L.A, m) == 0 && pole_order(L.B, m) == 0) return {rat(0), rat(1)};
    return exponents_at_factor(L, m, [](const QuadNum& v) { return v; }, t0);
}

std::pair<Rat, Rat> local_exponents(const FuchsOp& L, const AlgebraicPoint& pt) {
    const PolyQ& m = pt.minpoly;
    if (pole_order(L.A, m) == 0 && pole_order(L.B, m) == 0) return {rat(0), rat(1)};
    return exponents_at_factor(
        L, m, [&](const QuadNum& v) { return quot_embed(v, pt); }, quot_theta(pt));
}

std::pair<Rat, Rat> local_exponents_at_infinity(const FuchsOp& L) {
    auto [Ainf, Binf] = at_infinity(L);
    FuchsOp Linf;
    Linf.D = L.D;
    Linf.A = Ainf;
    Linf.B = Binf;
    return local_exponents(Linf, QuadNum::zero(L.D));
}

FuchsOp derive_ode(const FamilyModel& fm, int i) {
    if (i != 1 && i != 2) throw Error("derive_ode: i must be 1 or 2");
    long D = fm.D;
    GaussManinRaw raw = gauss_manin_raw(fm, i);
    std::array<PolyQ, 4> W0, W1, W2;
    PolyQ m0 = raw.w1.den * raw.w2.den;
    PolyQ m1 = raw.w0.den * raw.w2.den;
    PolyQ m2 = raw.w0.den * raw.w1.den;
    for (size_t k = 0; k < 4; ++k) {
        W0[k] = raw.w0.num[k] * m0;
        W1[k] = raw.w1.num[k] * m1;
        W2[k] = raw.w2.num[k] * m2;
    }
    for (size_t r = 0; r < 4; ++r)
        for (size_t s = r + 1; s < 4; ++s) {
            PolyQ det = W0[r] * W1[s] - W0[s] * W1[r];
            if (det.is_zero()) continue;
            PolyQ c0n = W1[r] * W2[s] - W1[s] * W2[r];
            PolyQ c1n = W0[s] * W2[r] - W0[r] * W2[s];
            // exactness certificate: the combination annihilates every coordinate
            for (size_t k = 0; k < 4; ++k) {
                PolyQ chk = c0n * W0[k] + c1n * W1[k] + det * W2[k];
                if (!chk.is_zero()) throw NotRankTwo("omega_i is not an eigenform");
            }
            FuchsOp L;
            L.D = D;
            L.A = RationalFunction(c1n, det);
            L.B = RationalFunction(c0n, det);
            // singularity records: cusps, Kodaira-Spencer zeros, infinity
            PolyQ t = PolyQ({QuadNum::zero(D), QuadNum::one(D)});
            std::vector<std::variant<QuadNum, AlgebraicPoint, InfinityTag>> locs;
            std::vector<SingKind> kinds;
            locs.push_back(QuadNum::zero(D));
            kinds.push_back(SingKind::cusp);
            locs.push_back(QuadNum::one(D));
            kinds.push_back(SingKind::cusp);
            PolyQ accounted = t * linear_root(QuadNum::one(D));
            for (const auto& p : fm.cusps.extra_points) {
                locs.push_back(p);
                kinds.push_back(SingKind::cusp);
                accounted = accounted * linear_root(p);
            }
            if (fm.cusps.pair) {
                locs.push_back(*fm.cusps.pair);
                kinds.push_back(SingKind::cusp);
                accounted = accounted * fm.cusps.pair->minpoly;
            }
            // anything else in den(A) is a Kodaira-Spencer zero factor
            PolyQ extra = L.A.den();
            PolyQ red = gcd(extra, accounted);
            while (red.deg() > 0) {
                extra = exact_div(extra, red);
                red = gcd(extra, accounted);
            }
            if (extra.deg() > 0) {
                if (auto roots = split_quadratic(extra)) {
                    for (auto& rt : *roots) {
                        locs.push_back(rt);
                        kinds.push_back(SingKind::ks_zero);
                    }
                } else if (extra.deg() == 2) {
                    locs.push_back(AlgebraicPoint{monic(extra)});
                    kinds.push_back(SingKind::ks_zero);
                } else {
                    throw Error("unexpected singularity factor of degree > 2");
                }
            }
            for (size_t idx = 0; idx < locs.size(); ++idx) {
                SingularPoint sp;
                sp.loc = locs[idx];
                sp.kind = kinds[idx];
                if (auto* q = std::get_if<QuadNum>(&locs[idx]))
                    sp.exponents = local_exponents(L, *q);
                else
                    sp.exponents = local_exponents(L, std::get<AlgebraicPoint>(locs[idx]));
                L.singularities.push_back(sp);
            }
            SingularPoint inf;
            inf.loc = InfinityTag{};
            inf.kind = SingKind::infinity;
            inf.exponents = local_exponents_at_infinity(L);
            L.singularities.push_back(inf);
            return L;
        }
    throw NotRankTwo("rank-one span: no invertible minor");
}

FuchsOp gauge_transform(const FuchsOp& L, const RationalFunction& f) {
    if (f.is_zero()) throw Error("gauge_transform by zero");
    long D = L.D;
    RationalFunction lf = f.derivative() / f;  // logarithmic derivative
    FuchsOp out;
    out.D = D;
    RationalFunction two = RationalFunction::constant(QuadNum::integer(2, D));
    out.A = L.A - two * lf;
    // from u'' + Au' + Bu = 0 with w = f u:  B - A f'/f + (f'/f)^2 - (f'/f)'
    out.B = L.B - L.A * lf + lf * lf - lf.derivative();
    // exponent bookkeeping: the new operator annihilates f u, so exponents
    // shift by +ord(f) at finite points and deg den - deg num at infinity;
    // zeros and poles of f away from the recorded set become new (apparent)
    // singular points
    auto ord_at = [&](const PolyQ& m) {
        return factor_multiplicity(f.num(), m) - factor_multiplicity(f.den(), m);
    };
    std::vector<PolyQ> seen;
    for (const auto& sp : L.singularities) {
        SingularPoint ns = sp;
        int v = 0;
        if (auto* q = std::get_if<QuadNum>(&sp.loc)) {
            v = ord_at(linear_root(*q));
            seen.push_back(linear_root(*q));
        } else if (auto* ap = std::get_if<AlgebraicPoint>(&sp.loc)) {
            v = ord_at(ap->minpoly);
            seen.push_back(ap->minpoly);
        } else {
            v = f.den().deg() - f.num().deg();
        }
        ns.exponents.first += v;
        ns.exponents.second += v;
        out.singularities.push_back(ns);
    }
    for (const PolyQ* part : {&f.num(), &f.den()}) {
        if (part->deg() < 1) continue;
        for (auto& fac : squarefree_multiple_roots(*part)) {
            PolyQ m = std::holds_alternative<QuadNum>(fac.where)
                          ? linear_root(std::get<QuadNum>(fac.where))
                          : std::get<AlgebraicPoint>(fac.where).minpoly;
            bool recorded = false;
            for (const auto& s : seen)
                if (s == m) recorded = true;
            if (recorded) continue;
            seen.push_back(m);
            int v = ord_at(m);
            SingularPoint ns;
            if (std::holds_alternative<QuadNum>(fac.where))
                ns.loc = std::get<QuadNum>(fac.where);
            else
                ns.loc = std::get<AlgebraicPoint>(fac.where);
            ns.kind = SingKind::ks_zero;  // apparent point introduced by the gauge
            ns.exponents = {rat(0) + v, rat(1) + v};
            out.singularities.push_back(ns);
        }
    }
    return out;
}

bool fuchs_relation_check(const FuchsOp& L) {
    Rat sum = rat(0);
    int weight = 0;
    for (const auto& sp : L.singularities) {
        int mult = std::holds_alternative<AlgebraicPoint>(sp.loc)
                       ? std::get<AlgebraicPoint>(sp.loc).degree()
                       : 1;
        sum += (sp.exponents.first + sp.exponents.second) * mult;
        weight += mult;
    }
    return sum == rat(weight - 2);
}

bool annihilates(const FuchsOp& L, const H1Class& w0, const H1Class& w1, const H1Class& w2) {
    for (size_t k = 0; k < 4; ++k) {
        RationalFunction chk = w2[k] + L.A * w1[k] + L.B * w0[k];
        if (!chk.is_zero()) return false;
    }
    return true;
}

}  // namespace teichfuchs

namespace teichfuchs {

namespace {

PolyQ ref_poly(long D, Rat scale, std::vector<std::pair<long, long>> ab) {
    std::vector<QuadNum> c;
    for (auto& [a, b] : ab) c.push_back(QuadNum(a * scale, b * scale, D));
    return PolyQ(std::move(c));
}

}  // namespace

std::pair<RationalFunction, RationalFunction> reference_operator(long D, int i) {
    if ((D != 13 && D != 17) || (i != 1 && i != 2)) throw UnsupportedDiscriminant();
    FamilyModel fm = family(D, 1);
    PolyQ t = PolyQ({QuadNum::zero(D), QuadNum::one(D)});
    PolyQ pi = t * linear_root(QuadNum::one(D));
    for (const auto& p : fm.cusps.extra_points) pi = pi * linear_root(p);
    if (fm.cusps.pair) pi = pi * fm.cusps.pair->minpoly;
    if (D == 17 && i == 1) {
        PolyQ bnum = ref_poly(17, rat(1, 256), {{1296, -240}, {-4557, 891}, {576, 0}});
        return {RationalFunction(derivative(pi), pi), RationalFunction(bnum, pi)};
    }
    if (D == 17 && i == 2) {
        PolyQ mu = ref_poly(17, rat(1, 128), {{128, 0}, {137, -95}, {128, 0}});
        PolyQ bnum = ref_poly(17, rat(1, 16384),
                              {{47104, -10240},
                               {-177536, 38528},
                               {-260375, 69633},
                               {35616, -12768},
                               {4096, 0}});
        PolyQ den = pi * mu;
        return {RationalFunction(derivative(pi) * mu - pi * derivative(mu), den),
                RationalFunction(bnum, den)};
    }
    if (D == 13 && i == 1) {
        PolyQ bnum = ref_poly(13, rat(1, 512), {{192, -120}, {-576, 333}, {1152, 0}});
        return {RationalFunction(derivative(pi), pi), RationalFunction(bnum, pi)};
    }
    PolyQ mu = ref_poly(13, rat(1, 48), {{48, 0}, {5, 28}, {48, 0}});
    PolyQ bnum = ref_poly(13, rat(1, 3L * 131072),
                          {{61440, -18432},
                           {-99072, 106176},
                           {698944, 5744},
                           {67584, 135936},
                           {98304, 0}});
    PolyQ den = pi * mu;
    return {RationalFunction(derivative(pi) * mu - pi * derivative(mu), den),
            RationalFunction(bnum, den)};
}

}  // namespace teichfuchs
