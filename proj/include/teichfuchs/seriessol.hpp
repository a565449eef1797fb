#pragma once

#include <set>

#include "teichfuchs/picardfuchs.hpp"

namespace teichfuchs {

/// The banded coefficient recursion sum_k D_k(j) u_{j-k} = 0 (k = -1..r-3)
/// obtained by clearing the denominators of a Fuchsian operator whose local
/// exponents at t = 0 are (0, 0).
struct Recursion {
    long D = 0;
    int r = 0;                      // number of singularities, deg P2 + 1
    std::vector<Poly<QuadNum>> band;  // band[k+1] = D_k as a polynomial in j
    QuadNum M;                      // product of the finite nonzero singularities
    Rat gamma;                      // double exponent at infinity
    bool boundary_ok = false;       // D_{-1} = +-M (j+1)^2 and D_{r-3} = (j+gamma-r+3)^2
    PolyQ P2, P1, P0;               // the cleared operator
};

Recursion build_recursion(const FuchsOp& L);

/// The unique solution with u(0) = 1; prefix of length N+1.
/// Throws ExponentNormalization unless the exponents at 0 are (0,0).
SeriesPrefix<QuadNum> holomorphic_solution(const FuchsOp& L, int N);

struct SolutionReport {
    SeriesPrefix<QuadNum> prefix;
    std::set<long> S_used;
    int max_checked = 0;
    std::vector<std::pair<int, long>> violations;  // (index, offending prime)
};

/// Check every coefficient of the holomorphic solution for S-integrality.
SolutionReport integrality_report(const FuchsOp& L, const std::set<long>& S, int N);

/// The cleared polynomial form (P2, P1, P0) = lcm-den * (1, A, B).
std::array<PolyQ, 3> cleared_operator(const FuchsOp& L);

}  // namespace teichfuchs
