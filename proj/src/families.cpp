#include "teichfuchs/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "teichfuchs/numring.hpp"
#include "teichfuchs/resultant.hpp"

namespace teichfuchs {

namespace {

PolyQ make_poly(long D, Rat scale, std::vector<std::pair<long, long>> ab) {
    std::vector<QuadNum> c;
    for (auto& [a, b] : ab) c.push_back(QuadNum(a * scale, b * scale, D));
    return PolyQ(std::move(c));
}

FamilyModel model17() {
    FamilyModel fm;
    fm.D = 17;
    fm.eps = 1;
    fm.c[0] = make_poly(17, rat(1),
                        {{1755475, 425765},
                         {-5289173, -1282803},
                         {3533762, 857038},
                         {3533762, 857038},
                         {-5289173, -1282803},
                         {1755475, 425765}});
    fm.c[1] = make_poly(17, rat(1, 2),
                        {{331187, 80325},
                         {-1281964, -310964},
                         {1901714, 461278},
                         {-1281964, -310964},
                         {331187, 80325}});
    // The constant term is the palindromic mirror of the t^3 coefficient; the
    // sign of its radical part is pinned by the discriminant factorization.
    fm.c[2] = make_poly(17, rat(1, 4),
                        {{-15783, -3825}, {15687, 3825}, {15687, 3825}, {-15783, -3825}});
    fm.c[3] = make_poly(17, rat(1, 8), {{-4551, -1105}, {8918, 2210}, {-4551, -1105}});
    fm.c[4] = make_poly(17, rat(1), {{3, 0}, {3, 0}});
    fm.c[5] = make_poly(17, rat(1), {{1, 0}});
    fm.cusps.rational_points = {QuadNum::zero(17), QuadNum::one(17)};
    fm.cusps.extra_points = {QuadNum(rat(31, 2), rat(-7, 2), 17),
                             QuadNum(rat(31, 64), rat(7, 64), 17)};
    fm.S_exceptional = {2, 17};
    return fm;
}

FamilyModel model13() {
    FamilyModel fm;
    fm.D = 13;
    fm.eps = 1;
    fm.c[0] = make_poly(13, rat(1, 1L << 15),
                        {{5717606400L, -1585778688L},
                         {-17158488768L, 4758908544L},
                         {11440882287L, -3173129856L},
                         {11440882287L, -3173129856L},
                         {-17158488768L, 4758908544L},
                         {5717606400L, -1585778688L}});
    fm.c[1] = make_poly(13, rat(1, 1L << 12),
                        {{114041088, -31629312},
                         {-448550784, 124405632},
                         {669019797, -185552640},
                         {-448550784, 124405632},
                         {114041088, -31629312}});
    fm.c[2] = make_poly(13, rat(1, 1L << 5),
                        {{-27000, 7488}, {26991, -7488}, {26991, -7488}, {-27000, 7488}});
    fm.c[3] = make_poly(13, rat(1, 1L << 6), {{-14992, 4160}, {30011, -8320}, {-14992, 4160}});
    fm.c[4] = make_poly(13, rat(1), {{1, 0}, {1, 0}});
    fm.c[5] = make_poly(13, rat(1), {{1, 0}});
    fm.cusps.rational_points = {QuadNum::zero(13), QuadNum::one(13)};
    fm.cusps.pair = AlgebraicPoint{
        PolyQ({QuadNum::one(13), QuadNum(rat(0), rat(71, 128), 13), QuadNum::one(13)})};
    fm.S_exceptional = {2, 3, 13};
    return fm;
}

}  // namespace

PolyQ FamilyModel::cusp_factor() const {
    PolyQ f = PolyQ::constant(QuadNum::one(D));
    for (const auto& p : cusps.extra_points) f = f * linear_root(p);
    if (cusps.pair) f = f * cusps.pair->minpoly;
    return f;
}

FamilyModel family(long D, int eps) {
    if (D != 13 && D != 17) throw UnsupportedDiscriminant();
    FamilyModel fm = D == 17 ? model17() : model13();
    if (D == 17 && eps == 0) {
        fm.eps = 0;
        for (auto& ck : fm.c)
            for (auto& v : ck.c) v = v.conj();
        for (auto& p : fm.cusps.extra_points) p = p.conj();
        for (auto& p : fm.cusps.rational_points) p = p.conj();
    }
    return fm;
}

PolyQ fiber(const FamilyModel& fm, const QuadNum& t0) {
    std::vector<QuadNum> c;
    for (const auto& ck : fm.c) c.push_back(ck.is_zero() ? QuadNum::zero(fm.D) : eval(ck, t0));
    return PolyQ(std::move(c));
}

std::vector<QuotElem> fiber(const FamilyModel& fm, const AlgebraicPoint& t0) {
    std::vector<QuotElem> c;
    for (const auto& ck : fm.c)
        c.push_back(ck.is_zero() ? quot_embed(QuadNum::zero(fm.D), t0) : eval_at_algebraic(ck, t0));
    return c;
}

namespace {

template <class S, class Lift>
std::optional<S> match_impl(const std::vector<S>& fib, const CuspNormalForm& nf, Lift&& lift) {
    // want fib(rho x) = rho^5 nf(x), i.e. fib_k rho^k = rho^5 nf_k for all k
    if (fib.size() != 6 || !(fib[5] == lift(nf.quintic.lc()))) return std::nullopt;
    S nf4 = lift(nf.quintic[4]);
    if (nf4.is_zero() || fib[4].is_zero()) return std::nullopt;
    S rho = fib[4] / nf4;
    S rho5 = rho * rho * rho * rho * rho;
    S rpow = lift(nf.quintic.lc());  // rho^0; the quintic is monic
    for (int k = 0; k <= 5; ++k) {
        if (!(fib[(size_t)k] * rpow == rho5 * lift(nf.quintic[(size_t)k]))) return std::nullopt;
        rpow = rpow * rho;
    }
    return rho;
}

}  // namespace

std::optional<QuadNum> match_normal_form(const PolyQ& fib, const CuspNormalForm& nf) {
    if (fib.deg() != 5) return std::nullopt;
    std::vector<QuadNum> c(fib.c.begin(), fib.c.end());
    return match_impl(c, nf, [](const QuadNum& v) { return v; });
}

std::optional<QuotElem> match_normal_form(const std::vector<QuotElem>& fib,
                                          const CuspNormalForm& nf) {
    if (fib.size() != 6) return std::nullopt;
    const QuotElem& sample = fib[0];
    return match_impl(fib, nf,
                      [&](const QuadNum& v) { return QuotElem::scalar(v, sample.p0, sample.p1); });
}

DiscriminantReport discriminant_report(const FamilyModel& fm) {
    Poly<PolyQ> g;
    for (const auto& ck : fm.c) g.c.push_back(ck);
    g.trim();
    DiscriminantReport rep;
    rep.disc = discriminant(g);
    PolyQ rest = rep.disc;
    auto peel = [&rest](const PolyQ& m) {
        int k = factor_multiplicity(rest, m);
        for (int i = 0; i < k; ++i) rest = exact_div(rest, m);
        return k;
    };
    PolyQ t = PolyQ({QuadNum::zero(fm.D), QuadNum::one(fm.D)});
    rep.mult_zero = peel(t);
    rep.mult_one = peel(linear_root(QuadNum::one(fm.D)));
    for (const auto& p : fm.cusps.extra_points) rep.mult_cusps.push_back(peel(linear_root(p)));
    if (fm.cusps.pair) rep.mult_cusps.push_back(peel(fm.cusps.pair->minpoly));
    if (rest.deg() != 0) throw Error("discriminant has unexpected factors");
    rep.unit = rest[0];
    if (fm.D == 17)
        rep.pattern_ok = rep.mult_zero == 5 && rep.mult_one == 4 &&
                         rep.mult_cusps == std::vector<int>{3, 3};
    else
        rep.pattern_ok =
            rep.mult_zero == 4 && rep.mult_one == 4 && rep.mult_cusps == std::vector<int>{4};
    Rat n = rep.unit.norm();
    for (const Int& part : {Int(n.get_num()), Int(n.get_den())}) {
        Int v = abs(part);
        for (long q = 2; Int(q) * q <= v; q = (q == 2 ? 3 : q + 2))
            if (v % q == 0) {
                rep.unit_norm_primes.insert(q);
                while (v % q == 0) v /= q;
            }
        if (v > 1) rep.unit_norm_primes.insert(v.get_si());
    }
    return rep;
}

namespace {

/// Norms whose prime support marks collisions between distinct cusps mod wp.
std::vector<Rat> cusp_separation_norms(const FamilyModel& fm) {
    std::vector<Rat> out;
    std::vector<QuadNum> pts = fm.cusps.rational_points;
    pts.insert(pts.end(), fm.cusps.extra_points.begin(), fm.cusps.extra_points.end());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) out.push_back((pts[i] - pts[j]).norm());
    if (fm.cusps.pair) {
        const PolyQ& m = fm.cusps.pair->minpoly;
        for (const auto& p : pts) out.push_back(eval(m, p).norm());
        // separation of the two conjugate roots: the discriminant of m
        QuadNum dm = m[1] * m[1] - QuadNum::integer(4, fm.D) * m[0];
        out.push_back(dm.norm());
    }
    return out;
}

int rat_valuation(const Rat& q, long p) {
    if (q == 0) throw Error("valuation of zero");
    int v = 0;
    Int num = q.get_num(), den = q.get_den();
    while (num % p == 0) num /= p, ++v;
    while (den % p == 0) den /= p, --v;
    return v;
}

}  // namespace

int ramified_valuation(const QuadNum& x, long D) {
    if (x.is_zero()) throw Error("ramified_valuation of zero");
    return rat_valuation(x.norm(), D);
}

namespace {

/// Prime scans call good_reduction once per prime; the discriminant only
/// depends on the model, so keep one report per (D, eps).
const DiscriminantReport& cached_discriminant_report(const FamilyModel& fm) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, DiscriminantReport> cache;
    std::scoped_lock lock(mu);
    auto key = std::pair{fm.D, fm.eps};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, discriminant_report(fm)).first;
    return it->second;
}

}  // namespace

ReductionReport good_reduction(const FamilyModel& fm, long p) {
    if (p < 3) throw Error("good_reduction: p must be odd");
    ReductionReport rep;
    rep.p = p;
    const DiscriminantReport& d = cached_discriminant_report(fm);
    if (rat_valuation(d.unit.norm(), p) != 0) {
        rep.status = ReductionStatus::bad_model;
        rep.evidence = "p divides the norm of the discriminant unit part";
        if (p == fm.D)
            rep.evidence += "; the fiber quintic degenerates to a fifth power mod sqrt(p)";
        if (fm.D == 13 && p == 3)
            rep.evidence += "; this prime persists under every model of the family";
        return rep;
    }
    for (const Rat& n : cusp_separation_norms(fm)) {
        if (rat_valuation(n, p) != 0) {
            rep.status = ReductionStatus::bad_model;
            rep.evidence = "two cusps collide mod wp";
            return rep;
        }
    }
    rep.status = ReductionStatus::good;
    rep.evidence = "unit-part norm and cusp separations are prime to p";
    return rep;
}

PGoodTransform potentially_good_at_D(const FamilyModel& fm) {
    long p = fm.D;
    PGoodTransform out;
    out.p = p;
    // shift = integer lift of c4/5 mod wp, as a polynomial in t
    long inv5 = 1;
    while ((5 * inv5) % p != 1) ++inv5;
    PolyQ s;
    {
        std::vector<QuadNum> sc;
        for (const auto& v : fm.c[4].c) {
            Rat a = v.a();
            long r = Int((a.get_num() % p + p) % p).get_si();  // c4 has integer entries
            sc.push_back(QuadNum::integer(r * inv5 % p, fm.D));
        }
        s = PolyQ(std::move(sc));
    }
    // a_k = sum_j c_j binom(j,k) (-s)^{j-k}
    static const long binom[6][6] = {{1, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0},
                                     {1, 2, 1, 0, 0, 0},      {1, 3, 3, 1, 0, 0},
                                     {1, 4, 6, 4, 1, 0},      {1, 5, 10, 10, 5, 1}};
    PolyQ negs = -s;
    std::array<PolyQ, 6> a;
    for (int k = 0; k <= 5; ++k) {
        PolyQ acc;
        for (int j = k; j <= 5; ++j) {
            PolyQ term = fm.c[(size_t)j] * QuadNum::integer(binom[j][k], fm.D);
            for (int i = 0; i < j - k; ++i) term = term * negs;
            acc += term;
        }
        a[(size_t)k] = acc;
    }
    // congruence: v(a_k) >= 1 for k < 5 means g = (x + shift)^5 mod wp
    for (int k = 0; k < 5; ++k)
        for (const auto& coef : a[(size_t)k].c)
            if (!coef.is_zero() && ramified_valuation(coef, fm.D) < 1)
                throw CongruenceFails("fiber quintic is not a fifth power mod sqrt(p)");
    // ghat_k = a_k * sqrt(p)^(k-5) reduced mod wp
    for (int k = 0; k <= 5; ++k) {
        int need = 5 - k;
        std::vector<long> coeffs(a[(size_t)k].c.size(), 0);
        for (size_t j = 0; j < a[(size_t)k].c.size(); ++j) {
            QuadNum v = a[(size_t)k][j];
            if (v.is_zero()) continue;
            int val = ramified_valuation(v, fm.D);
            if (val < need) throw CongruenceFails("valuation drops below the Newton slope");
            if (val > need) continue;
            for (int i = 0; i < need; ++i) v = QuadNum(v.b() * fm.D, v.a(), fm.D) / QuadNum::integer(fm.D, fm.D);
            // v is now a unit alpha + beta sqrt D; residue = alpha mod p
            Rat al = v.a();
            long num = Int((al.get_num() % p + p) % p).get_si();
            long den = Int((al.get_den() % p + p) % p).get_si();
            long deninv = 1;
            while ((den * deninv) % p != 1) ++deninv;
            coeffs[j] = num * deninv % p;
        }
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        out.ghat[(size_t)k] = std::move(coeffs);
    }
    // smoothness: disc_w of the lifted ghat is nonzero mod p
    Poly<PolyQ> gh;
    for (int k = 0; k <= 5; ++k) {
        std::vector<QuadNum> cc;
        for (long v : out.ghat[(size_t)k]) cc.push_back(QuadNum::integer(v, fm.D));
        gh.c.push_back(PolyQ(std::move(cc)));
    }
    gh.trim();
    PolyQ dw = discriminant(gh);
    out.smooth = false;
    for (const auto& v : dw.c) {
        Rat q = v.a();
        if (q.get_num() % p != 0) out.smooth = true;
    }
    return out;
}

JInvariantReport cusp_j_invariant(long D) {
    FamilyModel fm = family(D, 1);
    JInvariantReport rep;
    if (D == 17) {
        QuadNum tau = fm.cusps.extra_points[0];
        rep.s = (tau * tau + QuadNum::one(D)) / (tau + tau);
    } else {
        // s = (rho + 1/rho)/2 = -(minpoly t-coefficient)/2
        rep.s = -fm.cusps.pair->minpoly[1] / QuadNum::integer(2, D);
    }
    QuadNum one = QuadNum::one(D);
    QuadNum chi = (rep.s + one) / (rep.s - one);
    QuadNum n = chi * chi - chi + one;
    rep.j = QuadNum::integer(256, D) * n * n * n / (chi * chi * (chi - one) * (chi - one));
    rep.rational = rep.j.conj() == rep.j;
    return rep;
}

}  // namespace teichfuchs
