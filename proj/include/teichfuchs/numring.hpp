#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "teichfuchs/quadnum.hpp"

namespace teichfuchs {

using u64 = std::uint64_t;

/// Quadratic residue symbol of D mod an odd prime p.
int legendre(long D, long p);

/// Canonical square root of D mod p^n: the Hensel lift of min(r, p-r).
/// Requires legendre(D, p) = +1; throws NotResidue otherwise.
u64 hensel_sqrt(long D, long p, int n);

/// Truncated wp-adic coefficient ring (O_D tensor Z_p)/p^n.
/// k = 1 (split): sqrt(D) has a lift sqrtD_rep, elements are plain residues.
/// k = 2 (inert): elements live in (Z/p^n)[s]/(s^2 - D).
struct PrimeContext {
    long D = 0;
    long p = 0;
    int n = 1;
    int k = 1;
    u64 pn = 0;        // p^n
    u64 sqrtD = 0;     // lift of sqrt(D), k = 1 only
    u64 Dmod = 0;      // D mod p^n

    PrimeContext() = default;
    PrimeContext(long D, long p, int n);

    u64 add(u64 x, u64 y) const { return (x + y) % pn; }
    u64 sub(u64 x, u64 y) const { return (x + pn - y % pn) % pn; }
    u64 mul(u64 x, u64 y) const { return (unsigned __int128)x * y % pn; }
    u64 pow(u64 x, u64 e) const;
    u64 inv(u64 x) const;  // throws BadDenominator if gcd(x, p) > 1
    u64 reduce_rat(const Rat& q) const;
};

/// Element c0 + c1*s of (O_D/p^n); c1 = 0 whenever k = 1.
struct PadicQuad {
    u64 c0 = 0, c1 = 0;

    bool is_zero() const { return c0 == 0 && c1 == 0; }
    friend bool operator==(const PadicQuad&, const PadicQuad&) = default;
};

PadicQuad pq_add(const PrimeContext& ctx, PadicQuad x, PadicQuad y);
PadicQuad pq_sub(const PrimeContext& ctx, PadicQuad x, PadicQuad y);
PadicQuad pq_mul(const PrimeContext& ctx, PadicQuad x, PadicQuad y);
PadicQuad pq_scal(const PrimeContext& ctx, PadicQuad x, u64 c);
PadicQuad pq_neg(const PrimeContext& ctx, PadicQuad x);
/// Inverse of a unit; throws BadDenominator if x is not invertible.
PadicQuad pq_inv(const PrimeContext& ctx, PadicQuad x);
bool pq_is_unit(const PrimeContext& ctx, PadicQuad x);

/// Image of x in (O_D/p^n). Throws BadDenominator if p divides a denominator.
PadicQuad reduce_mod(const QuadNum& x, const PrimeContext& ctx);

/// True iff x lies in the localization of O_D away from S: every prime in the
/// denominator ideal of x belongs to S.
bool s_integral(const QuadNum& x, const std::set<long>& S);

/// Primes dividing the denominator ideal of x in O_D.
std::set<long> denominator_primes(const QuadNum& x);

}  // namespace teichfuchs
