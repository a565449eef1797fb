#include "teichfuchs/seriessol.hpp"

#include "teichfuchs/numring.hpp"

namespace teichfuchs {

std::array<PolyQ, 3> cleared_operator(const FuchsOp& L) {
    long D = L.D;
    PolyQ one = PolyQ::constant(QuadNum::one(D));
    PolyQ denA = L.A.is_zero() ? one : L.A.den();
    PolyQ denB = L.B.is_zero() ? one : L.B.den();
    PolyQ P2 = exact_div(denA * denB, gcd(denA, denB));  // monic lcm
    PolyQ P1 = L.A.is_zero() ? PolyQ{} : L.A.num() * exact_div(P2, denA);
    PolyQ P0 = L.B.is_zero() ? PolyQ{} : L.B.num() * exact_div(P2, denB);
    return {P2, P1, P0};
}

namespace {

void require_exponents_00(const FuchsOp& L) {
    auto e = local_exponents(L, QuadNum::zero(L.D));
    if (!(e.first == rat(0) && e.second == rat(0)))
        throw ExponentNormalization("local exponents at t = 0 are not (0,0)");
}

QuadNum coef_at(const PolyQ& p, int i) {
    if (i < 0 || i > p.deg()) return QuadNum::zero(p.is_zero() ? 17 : p.c.front().disc());
    return p[(size_t)i];
}

}  // namespace

Recursion build_recursion(const FuchsOp& L) {
    require_exponents_00(L);
    long D = L.D;
    auto [P2, P1, P0] = cleared_operator(L);
    Recursion rec;
    rec.D = D;
    rec.P2 = P2;
    rec.P1 = P1;
    rec.P0 = P0;
    if (P2.deg() < 1 || !coef_at(P2, 0).is_zero())
        throw ExponentNormalization("cleared operator does not vanish at t = 0");
    rec.r = P2.deg() + 1;
    int ktop = rec.r - 3;
    // D_k(j) = P2[k+2] (j-k)(j-k-1) + P1[k+1] (j-k) + P0[k]
    for (int k = -1; k <= ktop; ++k) {
        QuadNum a = coef_at(P2, k + 2), b = coef_at(P1, k + 1), c = coef_at(P0, k);
        // expand in j: a j^2 + (-a(2k+1) + b) j + (a k(k+1) - b k + c)
        QuadNum j2 = a;
        QuadNum j1 = -a * QuadNum::integer(2 * k + 1, D) + b;
        QuadNum j0 = a * QuadNum::integer(k * (k + 1), D) - b * QuadNum::integer(k, D) + c;
        rec.band.push_back(PolyQ({j0, j1, j2}));
    }
    // degrees above the band must be absent
    if (P1.deg() > rec.r - 2 || P0.deg() > rec.r - 3)
        throw ExponentNormalization("operator degrees exceed the banded shape");
    // boundary identities
    QuadNum p21 = coef_at(P2, 1);
    rec.M = ((rec.r - 2) % 2 == 0) ? p21 : -p21;  // P2[1] = (-1)^(r-2) M
    rec.gamma = local_exponents_at_infinity(L).first;
    bool low_ok = rec.band.front() == PolyQ({p21, p21 + p21, p21});
    QuadNum g(rec.gamma, rat(0), D);
    QuadNum shift = g - QuadNum::integer(rec.r - 3, D);
    bool top_ok = rec.band.back() ==
                  PolyQ({shift * shift, shift + shift, QuadNum::one(D)});
    rec.boundary_ok = low_ok && top_ok &&
                      local_exponents_at_infinity(L).second == rec.gamma;
    return rec;
}

SeriesPrefix<QuadNum> holomorphic_solution(const FuchsOp& L, int N) {
    require_exponents_00(L);
    long D = L.D;
    auto [P2, P1, P0] = cleared_operator(L);
    SeriesPrefix<QuadNum> u;
    u.c.reserve((size_t)N + 1);
    u.c.push_back(QuadNum::one(D));
    for (int j = 0; j < N; ++j) {
        QuadNum acc = QuadNum::zero(D);
        QuadNum coef_next = QuadNum::zero(D);
        for (int m = 0; m <= P2.deg(); ++m) {
            int k = j - m + 2;
            if (k < 1) continue;
            QuadNum w = coef_at(P2, m) * QuadNum::integer((long)k * (k - 1), D);
            if (k == j + 1)
                coef_next += w;
            else if (k <= j)
                acc += w * u.c[(size_t)k];
        }
        for (int m = 0; m <= P1.deg(); ++m) {
            int k = j - m + 1;
            if (k < 1) continue;
            QuadNum w = coef_at(P1, m) * QuadNum::integer(k, D);
            if (k == j + 1)
                coef_next += w;
            else if (k <= j)
                acc += w * u.c[(size_t)k];
        }
        for (int m = 0; m <= P0.deg(); ++m) {
            int k = j - m;
            if (k < 0) continue;
            acc += coef_at(P0, m) * u.c[(size_t)k];
        }
        if (coef_next.is_zero()) throw Error("recursion pivot vanished in characteristic zero");
        u.c.push_back(-(acc / coef_next));
    }
    return u;
}

SolutionReport integrality_report(const FuchsOp& L, const std::set<long>& S, int N) {
    SolutionReport rep;
    rep.prefix = holomorphic_solution(L, N);
    rep.S_used = S;
    rep.max_checked = N;
    for (int j = 0; j <= N; ++j) {
        for (long q : denominator_primes(rep.prefix.c[(size_t)j]))
            if (!S.count(q)) rep.violations.push_back({j, q});
    }
    return rep;
}

}  // namespace teichfuchs
