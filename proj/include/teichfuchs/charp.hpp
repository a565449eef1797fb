#pragma once

#include "teichfuchs/modring.hpp"
#include "teichfuchs/picardfuchs.hpp"

namespace teichfuchs {

/// g^((p^n - 1)/2) mod p^n. Throws ExceptionalPrime when p lies in the
/// model's exceptional set. The parallel flag selects the OpenMP kernel;
/// both kernels are kept and compared by tests and the benchmark tool.
ModBivar frob_power(const FamilyModel& fm, const PrimeContext& ctx, bool parallel = true);

struct BCPolys {
    ModPoly B1, B2, C1, C2;  // coefficients of x^{p^n-1}, x^{2p^n-1}, x^{p^n-2}, x^{2p^n-2}
};

BCPolys extract_BC(const ModBivar& pw, const PrimeContext& ctx);
BCPolys extract_BC(const FamilyModel& fm, const PrimeContext& ctx);

/// True iff the cleared operator applied to f vanishes mod p^n.
bool verify_mod_solution(const FuchsOp& L, const ModPoly& f);

struct CartierReport {
    int k = 0;                         // 1 split, 2 inert
    bool vanishing_ok = false;         // B_{1,2} = C_{1,1} = 0 (split) or B_{1,1} = C_{1,2} = 0
    bool complementary_nonzero = false;
    bool nonzero_at_cusps = false;     // the surviving polynomials are units at every finite cusp
};

CartierReport cartier_pattern(const FamilyModel& fm, long p);

/// Level-raising congruences mod p between levels n and n+1:
/// split:  B_{n+1,1} = B_{n,1}^p B_{1,1},  C_{n+1,2} = C_{n,2}^p C_{1,2};
/// inert:  B_{n+1,1} = C_{n,1}^p B_{1,2},  C_{n+1,2} = B_{n,2}^p C_{1,1},
/// with the complementary pair vanishing mod p.
bool congruence_check(const FamilyModel& fm, long p, int n);

struct BetaReport {
    long beta = -1;          // window start - 1
    bool congruence_ok = false;  // beta = -gamma_i mod p^ceil(n/2)
    bool lower_bound_ok = false;
    int used_k = 0;          // which expansion polynomial carried the window
};

/// First window of r_i - 2 consecutive coefficients vanishing mod p^n in the
/// unit-constant-term expansion polynomial for L_i (B for i = 1, C for i = 2).
BetaReport beta_n(const FamilyModel& fm, int i, const PrimeContext& ctx);

/// Polynomial-solution test mod p; the default degree bound is d_{1,1} + p.
bool honda_test(const FuchsOp& L, long p, long degree_bound = -1);

struct PCurvature {
    PrimeContext ctx;
    std::array<ModPoly, 4> psi;  // numerator matrix (row-major 2x2) over Delta^p
    ModPoly delta;
    bool nilpotent = false;
    bool zero = false;
};

/// Psi = (nabla d/dt)^p of the companion system mod p; nilpotency via
/// trace = det = 0.
PCurvature p_curvature(const FuchsOp& L, long p);

/// Reduce the cleared operator mod p^n, scaling away the common denominator.
/// Throws BadDenominator if p divides it.
std::array<ModPoly, 3> reduce_cleared_operator(const FuchsOp& L, const PrimeContext& ctx);

}  // namespace teichfuchs
