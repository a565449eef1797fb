#include "teichfuchs/teich.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace teichfuchs {

namespace {

long isqrt(long v) {
    long r = (long)std::sqrt((double)v);
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_square(long v) {
    if (v < 0) return false;
    long r = isqrt(v);
    return r * r == v;
}

long squarefree_part(long D, long& F) {
    long E = D;
    F = 1;
    for (long q = 2; q * q <= E; ++q) {
        while (E % (q * q) == 0) {
            E /= q * q;
            F *= q;
        }
    }
    return E;
}

}  // namespace

std::vector<Prototype> enumerate_prototypes(long D) {
    if (D <= 4 || (D % 4 != 0 && D % 4 != 1))
        throw BadDiscriminant("W_D is empty for D <= 4 or D != 0,1 mod 4");
    std::vector<Prototype> out;
    long emax = isqrt(D);
    for (long e = -emax; e <= emax; ++e) {
        if (((D - e * e) % 4) != 0) continue;
        long bc = (D - e * e) / 4;
        if (bc < 1) continue;
        for (long b = 1; b <= bc; ++b) {
            if (bc % b != 0) continue;
            long c = bc / b;
            if (c + e >= b) continue;
            long g = std::gcd(b, c);
            for (long a = 0; a < g; ++a) {
                if (std::gcd(std::gcd(a, b), std::gcd(c, e)) != 1) continue;
                out.push_back({a, b, c, e, D});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Prototype& x, const Prototype& y) {
        if (x.e != y.e) return x.e > y.e;
        if (x.b != y.b) return x.b > y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.a < y.a;
    });
    return out;
}

int spin(const Prototype& pt) {
    long F;
    squarefree_part(pt.D, F);
    long v = (pt.e - F) / 2 + (pt.c + 1) * (pt.a + pt.b + pt.a * pt.b);
    return (int)(((v % 2) + 2) % 2);
}

int spin_component_label(const Prototype& pt) { return spin(pt); }

bool spin_separates(long D) { return D % 8 == 1 && !is_square(D) && D != 9; }

CuspNormalForm normal_form(const Prototype& pt) {
    long D = pt.D;
    QuadNum lambda(rat(pt.e, 2), rat(1, 2), D);
    QuadNum sqrtD = QuadNum::sqrt_d(D);
    // lambda conj(lambda) = (e^2 - D)/4 = -bc, lambda - conj(lambda) = sqrt D
    QuadNum b2 = QuadNum::integer(pt.b * pt.b, D);
    QuadNum mu = lambda * (lambda * lambda.conj() - b2) / (lambda - lambda.conj());
    CuspNormalForm nf;
    nf.mu = mu;
    nf.lambda_sq = lambda * lambda;
    nf.b_sq = b2;
    PolyQ lin = linear_root(mu);
    PolyQ dbl1 = linear_root(mu + b2);
    PolyQ dbl2 = linear_root(mu + nf.lambda_sq);
    nf.quintic = lin * dbl1 * dbl1 * dbl2 * dbl2;
    return nf;
}

GaloisSwapReport galois_spin_swap_certificate(long D) {
    if (D % 8 != 1 || is_square(D))
        throw NotApplicable("needs D = 1 mod 8, not a square");
    long b = (D - 1) / 4;
    CuspNormalForm plus = normal_form({0, b, 1, 1, D});
    CuspNormalForm minus = normal_form({0, b, 1, -1, D});
    GaloisSwapReport rep;
    rep.lambda_sq_swaps = plus.lambda_sq.conj() == minus.lambda_sq;
    rep.mu_swaps = plus.mu.conj() == minus.mu;
    rep.mu_ratio = plus.mu / minus.mu;
    QuadNum one_plus = QuadNum(rat(1), rat(1), D);  // 1 + sqrt D
    QuadNum expect = one_plus * one_plus / QuadNum::integer(D - 1, D);
    rep.lambda_sq_over_b_sq = plus.lambda_sq / QuadNum::integer(b * b, D);
    QuadNum quot = rep.mu_ratio / rep.lambda_sq_over_b_sq;
    rep.obstruction_ratio = quot.is_rational() ? quot.a() : rat(0);
    rep.passed = rep.lambda_sq_swaps && rep.mu_swaps && rep.mu_ratio == expect &&
                 quot.is_rational() && quot.a() == rat(D - 1, 4) && quot.a() != 1;
    return rep;
}

StratumConstants stratum_constants(Stratum s, int r1) {
    if (r1 < 3) throw Error("stratum_constants: r1 must be >= 3");
    StratumConstants out;
    out.stratum = s;
    out.lambda2 = s == Stratum::double_zero ? rat(1, 3) : rat(1, 2);
    out.r1 = r1;
    out.gamma1 = rat(r1 - 2, 2);
    out.gamma2 = out.lambda2 * out.gamma1;
    return out;
}

bool is_fundamental_discriminant(long D) {
    if (D <= 1) return false;
    long F;
    squarefree_part(D, F);
    if (D % 4 == 1) return F == 1;
    if (D % 4 == 0) {
        long m = D / 4;
        long Fm;
        return squarefree_part(m, Fm) == m && (m % 4 == 2 || m % 4 == 3);
    }
    return false;
}

bool triangle_obstruction(long D) {
    if (D <= 4 || (D % 4 != 0 && D % 4 != 1) || is_square(D))
        throw NotApplicable("needs a non-square discriminant D = 0,1 mod 4");
    if (!is_fundamental_discriminant(D)) {
        long F;
        long E = squarefree_part(D, F);
        long D0 = (E % 4 == 1) ? E : 4 * E;
        return triangle_obstruction(D0);
    }
    // trace field of Delta(n, m, infinity) is Q(z_n + 1/z_n, z_m + 1/z_m);
    // degree(Q(z_n + 1/z_n)) <= 2 exactly for n in {1,..,6} u {8,12}:
    //   degree 1: n in {1,2,3,4,6};  degree 2: n = 5 -> Q(sqrt5), 8 -> Q(sqrt2),
    //   12 -> Q(sqrt3).
    // A real quadratic compositum of two such fields is one of these three.
    long F;
    long E = squarefree_part(D, F);
    for (long kernel : {5L, 2L, 3L}) {
        if (E == kernel) return true;
    }
    return false;
}

}  // namespace teichfuchs
