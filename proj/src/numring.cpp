#include "teichfuchs/numring.hpp"

#include <numeric>

namespace teichfuchs {

int legendre(long D, long p) {
    if (p < 3 || p % 2 == 0) throw Error("legendre: p must be an odd prime");
    Int a(D), q(p);
    return mpz_legendre(a.get_mpz_t(), q.get_mpz_t());
}

namespace {

u64 mulmod(u64 x, u64 y, u64 m) { return (unsigned __int128)x * y % m; }

u64 powmod(u64 x, u64 e, u64 m) {
    u64 r = 1 % m;
    x %= m;
    while (e) {
        if (e & 1) r = mulmod(r, x, m);
        x = mulmod(x, x, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 x, u64 m) {
    long long t0 = 0, t1 = 1;
    long long r0 = (long long)m, r1 = (long long)(x % m);
    while (r1 != 0) {
        long long q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    if (r0 != 1) throw BadDenominator("not invertible in Z/p^n");
    long long t = t0 % (long long)m;
    if (t < 0) t += (long long)m;
    return (u64)t;
}

u64 tonelli_shanks(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // write p-1 = q 2^s
    u64 q = p - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    // find a nonresidue z
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) tt = mulmod(tt, tt, p), ++i;
        u64 b = powmod(c, u64(1) << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace

u64 hensel_sqrt(long D, long p, int n) {
    if (legendre(D, p) != 1) throw NotResidue("hensel_sqrt: D is not a residue mod p");
    u64 r = tonelli_shanks(((D % p) + p) % p, (u64)p);
    r = std::min(r, (u64)p - r);
    u64 pk = (u64)p;
    u64 pn = 1;
    for (int i = 0; i < n; ++i) {
        pn *= (u64)p;
        if (pn >= (u64(1) << 31)) throw Error("hensel_sqrt: p^n too large");
    }
    u64 Dm = (u64)(((D % (long)pn) + (long)pn) % (long)pn);
    while (pk < pn) {
        pk = std::min(pk * pk, pn);
        u64 pk2 = pk;
        // Newton: r <- (r + D/r) / 2 mod pk2
        u64 rr = r % pk2;
        rr = mulmod(rr + mulmod(Dm % pk2, invmod(rr, pk2), pk2), invmod(2, pk2), pk2);
        r = rr;
    }
    return r % pn;
}

PrimeContext::PrimeContext(long D_, long p_, int n_) {
    if (p_ < 3 || !is_prime(p_)) throw Error("PrimeContext: p must be an odd prime");
    if (n_ < 1) throw Error("PrimeContext: n must be >= 1");
    if (D_ % p_ == 0) throw Error("PrimeContext: p divides D");
    D = D_;
    p = p_;
    n = n_;
    pn = 1;
    for (int i = 0; i < n; ++i) {
        pn *= (u64)p;
        if (pn >= (u64(1) << 31)) throw Error("PrimeContext: p^n too large");
    }
    Dmod = (u64)(((D % (long)pn) + (long)pn) % (long)pn);
    k = legendre(D, p) == 1 ? 1 : 2;
    if (k == 1) sqrtD = hensel_sqrt(D, p, n);
}

u64 PrimeContext::pow(u64 x, u64 e) const { return powmod(x, e, pn); }

u64 PrimeContext::inv(u64 x) const { return invmod(x % pn, pn); }

u64 PrimeContext::reduce_rat(const Rat& q) const {
    Int num = q.get_num(), den = q.get_den();
    Int m((unsigned long)pn);
    Int r, dm;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    mpz_mod(dm.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    u64 d = dm.get_ui();
    if (d % (u64)p == 0) throw BadDenominator("denominator shares the prime p");
    return mulmod(r.get_ui(), invmod(d, pn), pn);
}

PadicQuad pq_add(const PrimeContext& c, PadicQuad x, PadicQuad y) {
    return {c.add(x.c0, y.c0), c.add(x.c1, y.c1)};
}
PadicQuad pq_sub(const PrimeContext& c, PadicQuad x, PadicQuad y) {
    return {c.sub(x.c0, y.c0), c.sub(x.c1, y.c1)};
}
PadicQuad pq_mul(const PrimeContext& c, PadicQuad x, PadicQuad y) {
    return {c.add(c.mul(x.c0, y.c0), c.mul(c.Dmod, c.mul(x.c1, y.c1))),
            c.add(c.mul(x.c0, y.c1), c.mul(x.c1, y.c0))};
}
PadicQuad pq_scal(const PrimeContext& c, PadicQuad x, u64 s) {
    return {c.mul(x.c0, s), c.mul(x.c1, s)};
}
PadicQuad pq_neg(const PrimeContext& c, PadicQuad x) {
    return {c.sub(0, x.c0), c.sub(0, x.c1)};
}
bool pq_is_unit(const PrimeContext& c, PadicQuad x) {
    u64 nrm = c.sub(c.mul(x.c0, x.c0), c.mul(c.Dmod, c.mul(x.c1, x.c1)));
    return nrm % (u64)c.p != 0;
}
PadicQuad pq_inv(const PrimeContext& c, PadicQuad x) {
    u64 nrm = c.sub(c.mul(x.c0, x.c0), c.mul(c.Dmod, c.mul(x.c1, x.c1)));
    u64 ni = c.inv(nrm);
    return {c.mul(x.c0, ni), c.mul(c.sub(0, x.c1), ni)};
}

PadicQuad reduce_mod(const QuadNum& x, const PrimeContext& ctx) {
    if (x.disc() != 0 && x.disc() != ctx.D) throw MixedDiscriminant();
    u64 a = ctx.reduce_rat(x.a());
    u64 b = ctx.reduce_rat(x.b());
    if (ctx.k == 1) return {ctx.add(a, ctx.mul(b, ctx.sqrtD)), 0};
    return {a, b};
}

namespace {

std::set<long> prime_factors(Int v) {
    std::set<long> out;
    v = abs(v);
    for (long q = 2; Int(q) * q <= v; q = (q == 2 ? 3 : q + 2)) {
        if (v % q == 0) {
            out.insert(q);
            while (v % q == 0) v /= q;
        }
    }
    if (v > 1) {
        if (!v.fits_slong_p()) throw Error("denominator prime too large to factor");
        out.insert(v.get_si());
    }
    return out;
}

int val2(const Rat& q) {
    // 2-adic valuation (negative when 2 divides the denominator)
    if (q == 0) return 1 << 20;
    Int num = q.get_num(), den = q.get_den();
    int v = 0;
    while (mpz_even_p(num.get_mpz_t())) num /= 2, ++v;
    while (mpz_even_p(den.get_mpz_t())) den /= 2, --v;
    return v;
}

}  // namespace

std::set<long> denominator_primes(const QuadNum& x) {
    std::set<long> out;
    auto odd_of = [&](const Rat& q) {
        for (long pr : prime_factors(q.get_den()))
            if (pr != 2) out.insert(pr);
    };
    odd_of(x.a());
    odd_of(x.b());
    long D = x.disc();
    bool two_ok;
    if (D % 4 == 0) {
        two_ok = val2(x.a()) >= 0 && val2(x.b()) >= -1;
    } else {
        two_ok = val2(x.a()) >= -1 && val2(x.b()) >= -1 && val2(x.a() - x.b()) >= 0;
    }
    if (!two_ok) out.insert(2);
    return out;
}

bool s_integral(const QuadNum& x, const std::set<long>& S) {
    for (long q : denominator_primes(x))
        if (!S.count(q)) return false;
    return true;
}

}  // namespace teichfuchs
