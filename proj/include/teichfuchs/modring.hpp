#pragma once

#include <vector>

#include "teichfuchs/numring.hpp"
#include "teichfuchs/poly.hpp"

namespace teichfuchs {

/// Polynomial in t over (O_D/p^n).
struct ModPoly {
    PrimeContext ctx;
    std::vector<PadicQuad> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    PadicQuad at(size_t i) const { return i < c.size() ? c[i] : PadicQuad{}; }
};

ModPoly mod_add(const ModPoly& f, const ModPoly& g);
ModPoly mod_sub(const ModPoly& f, const ModPoly& g);
ModPoly mod_mul(const ModPoly& f, const ModPoly& g);
ModPoly mod_scal(const ModPoly& f, PadicQuad s);
ModPoly mod_deriv(const ModPoly& f);
ModPoly mod_pow(const ModPoly& f, u64 e);
bool mod_eq(const ModPoly& f, const ModPoly& g);
/// Reduce mod p (from precision n to 1).
ModPoly mod_drop_to_prime(const ModPoly& f);
/// Reduction of an exact polynomial; throws BadDenominator if p divides one.
ModPoly reduce_poly(const PolyQ& f, const PrimeContext& ctx);
PadicQuad mod_eval(const ModPoly& f, PadicQuad x);
/// Monic gcd over the residue field F_{p^k}; requires n = 1.
ModPoly mod_gcd_field(ModPoly f, ModPoly g);

/// Dense bivariate polynomial over (O_D/p^n), c0/c1 components laid out
/// row-major as [x-degree][t-degree].
struct ModBivar {
    PrimeContext ctx;
    int nx = 0, nt = 0;  // array extents (degree + 1)
    std::vector<u64> c0, c1;

    u64& at0(int i, int j) { return c0[(size_t)i * (size_t)nt + (size_t)j]; }
    u64& at1(int i, int j) { return c1[(size_t)i * (size_t)nt + (size_t)j]; }
    u64 get0(int i, int j) const { return c0[(size_t)i * (size_t)nt + (size_t)j]; }
    u64 get1(int i, int j) const { return c1[(size_t)i * (size_t)nt + (size_t)j]; }
};

/// g(x, t) reduced mod p^n as a 6x6 bivariate block.
template <class Family>
ModBivar reduce_bivariate(const Family& fm, const PrimeContext& ctx) {
    ModBivar g;
    g.ctx = ctx;
    g.nx = 6;
    g.nt = 6;
    g.c0.assign(36, 0);
    g.c1.assign(36, 0);
    for (int k = 0; k <= 5; ++k)
        for (int j = 0; j <= fm.c[(size_t)k].deg(); ++j) {
            PadicQuad v = reduce_mod(fm.c[(size_t)k][(size_t)j], ctx);
            g.at0(k, j) = v.c0;
            g.at1(k, j) = v.c1;
        }
    return g;
}

/// base^e by iterated multiplication with the 6x6 block; the serial reference
/// uses scatter loops, the parallel kernel gathers per output coefficient
/// under OpenMP. Both produce identical arrays.
ModBivar bivar_power_serial(const ModBivar& g, u64 e);
ModBivar bivar_power_parallel(const ModBivar& g, u64 e);

/// Coefficient of x^xdeg as a polynomial in t.
ModPoly bivar_x_coefficient(const ModBivar& f, long xdeg);

}  // namespace teichfuchs
