#pragma once

#include <vector>

#include "teichfuchs/algebraic.hpp"
#include "teichfuchs/poly.hpp"

namespace teichfuchs {

/// Splitting prototype (a,b,c,e) of discriminant D = e^2 + 4bc, with
/// 0 <= a < gcd(b,c), b > 0, c > 0, c + e < b, gcd(a,b,c,e) = 1.
struct Prototype {
    long a = 0, b = 0, c = 0, e = 0;
    long D = 0;

    friend bool operator==(const Prototype&, const Prototype&) = default;
};

/// All splitting prototypes of discriminant D, ordered as (e desc, b desc,
/// c asc, a asc). Throws BadDiscriminant for D <= 4 or D != 0,1 mod 4.
std::vector<Prototype> enumerate_prototypes(long D);

/// Raw value of the spin formula (e - F)/2 + (c+1)(a + b + ab) mod 2,
/// where D = E F^2 with E squarefree.
int spin(const Prototype& pt);

/// Component label: the spin class containing the cusps of the stored
/// X(D)^1 model. For the discriminants in scope this is the raw formula
/// value itself (the normal-form matching in the families module pins the
/// calibration; see tests). Reported separately so the raw value stays
/// available.
int spin_component_label(const Prototype& pt);

/// True iff D is 1 mod 8 and not a square, i.e. the spin invariant separates
/// two components.
bool spin_separates(long D);

struct CuspNormalForm {
    QuadNum mu;        // simple root of the quintic
    QuadNum lambda_sq; // lambda^2, lambda = (e + sqrt D)/2
    QuadNum b_sq;      // b^2
    PolyQ quintic;     // (x - mu)(x - mu - b^2)^2 (x - mu - lambda^2)^2
};

/// Stable-fiber normal form of a prototype cusp:
///   lambda = (e + sqrt D)/2,
///   mu = lambda (lambda conj(lambda) - b^2) / (lambda - conj(lambda))
///      = -lambda b (b+c) / sqrt(D).
/// The denominator is lambda - conj(lambda); the conjugate-flipped variant
/// fails to match the degenerate fibers of the universal families.
CuspNormalForm normal_form(const Prototype& pt);

struct GaloisSwapReport {
    bool lambda_sq_swaps = false;  // conj(lambda_1^2) == lambda_{-1}^2
    bool mu_swaps = false;         // conj(mu_1) == mu_{-1}
    QuadNum mu_ratio;              // mu_1 / mu_{-1} = (1 + sqrt D)^2 / (D - 1)
    QuadNum lambda_sq_over_b_sq;   // lambda_1^2 / b^2
    Rat obstruction_ratio;         // (mu ratio)/(lambda^2/b^2) = (D-1)/4, never 1
    bool passed = false;
};

/// Certificate that Galois conjugation moves the cusp of prototype
/// (0, (D-1)/4, 1, 1) to the cusp of (0, (D-1)/4, 1, -1) without the marked
/// fibers being isomorphic. Throws NotApplicable unless D = 1 mod 8 and
/// D is not a square.
GaloisSwapReport galois_spin_swap_certificate(long D);

enum class Stratum { double_zero, two_simple_zeros };  // OmegaM_2(2), OmegaM_2(1,1)

struct StratumConstants {
    Stratum stratum;
    Rat lambda2;   // second Lyapunov exponent
    int r1;        // number of singularities of L_1 (cusps of the working cover)
    Rat gamma1;    // (r1 - 2)/2
    Rat gamma2;    // lambda2 (r1 - 2)/2
};

StratumConstants stratum_constants(Stratum s, int r1);

/// True iff the affine group of a primitive Teichmueller curve of fundamental
/// discriminant D can be commensurable to a triangle group: exactly
/// D in {5, 8, 12}. Non-fundamental D reduce to D/F^2. Computed by matching
/// Q(sqrt D) against the trace fields Q(zeta_n + 1/zeta_n) of degree <= 2.
bool triangle_obstruction(long D);

/// Fundamental discriminant test: D = E (E = 1 mod 4 squarefree) or D = 4E
/// (E = 2,3 mod 4 squarefree).
bool is_fundamental_discriminant(long D);

}  // namespace teichfuchs
