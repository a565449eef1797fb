#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teichfuchs/algebraic.hpp"
#include "teichfuchs/teich.hpp"

namespace teichfuchs {

/// Position of a cusp of the base curve: a point of Q(sqrt D) or an unsplit
/// conjugate pair (one AlgebraicPoint), plus t = infinity.
struct CuspSet {
    std::vector<QuadNum> rational_points;   // includes 0 and 1
    std::optional<AlgebraicPoint> pair;     // D = 13 only
    std::vector<QuadNum> extra_points;      // tau, 1/tau for D = 17
};

/// The universal genus-2 family y^2 = sum c_k(t) x^k over W_D^eps,
/// deg_t c_k = 5 - k, c_5 = 1, c_6 = 0.
struct FamilyModel {
    long D = 0;
    int eps = 1;
    std::array<PolyQ, 6> c;
    CuspSet cusps;
    std::set<long> S_exceptional;

    PolyQ cusp_factor() const;  // monic polynomial with the finite nonzero cusps as roots
};

/// The stored model for D in {13, 17}; eps = 0 conjugates every coefficient
/// (for D = 13 the component is unique and eps is ignored).
FamilyModel family(long D, int eps);

/// g(x, t0) as a polynomial in x.
PolyQ fiber(const FamilyModel& fm, const QuadNum& t0);
/// Fiber over an unsplit quadratic point, with coefficients in the quotient field.
std::vector<QuotElem> fiber(const FamilyModel& fm, const AlgebraicPoint& t0);

/// Scaling rho with fiber(rho x) proportional to nf.quintic(x), if one exists.
std::optional<QuadNum> match_normal_form(const PolyQ& fib, const CuspNormalForm& nf);
std::optional<QuotElem> match_normal_form(const std::vector<QuotElem>& fib,
                                          const CuspNormalForm& nf);

struct DiscriminantReport {
    PolyQ disc;                      // discriminant of g in x, exact
    QuadNum unit;                    // constant left after peeling the cusp factors
    int mult_zero = 0;               // multiplicity of t
    int mult_one = 0;                // multiplicity of t - 1
    std::vector<int> mult_cusps;     // multiplicities of the remaining cusp factors
    bool pattern_ok = false;         // (5,4,3,3) for D=17, (4,4,4) with the pair counted once for D=13
    std::set<long> unit_norm_primes; // primes dividing N(unit)
};

DiscriminantReport discriminant_report(const FamilyModel& fm);

enum class ReductionStatus { good, bad_model, potentially_good, not_potentially_good };

struct ReductionReport {
    long p = 0;
    ReductionStatus status = ReductionStatus::good;
    std::string evidence;
};

/// Good reduction of the stored model at an odd prime p: the discriminant's
/// unit part stays a unit and the cusps stay pairwise distinct mod wp.
ReductionReport good_reduction(const FamilyModel& fm, long p);

/// The p = D degeneration: verifies g = (x + shift)^5 mod wp, substitutes
/// x = z - shift, z = sqrt(p) w, and divides by the minimal power of sqrt(p)
/// (tracking wp-valuations); returns the reduced quintic in w with
/// coefficients in F_p[t]. Throws CongruenceFails if the fifth-power
/// congruence does not hold.
struct PGoodTransform {
    long p = 0;
    std::array<std::vector<long>, 6> ghat;  // ghat[k] = F_p[t] coefficients of w^k
    bool smooth = false;                    // disc_w(ghat) != 0 in F_p[t]
};

PGoodTransform potentially_good_at_D(const FamilyModel& fm);

struct JInvariantReport {
    QuadNum s;        // the finite fourth point of Sigma = {1, -1, inf, s}
    QuadNum j;        // PGL_2-invariant of the 4-point set
    bool rational;    // conj(j) == j
};

JInvariantReport cusp_j_invariant(long D);

/// wp-adic valuation at the ramified prime (sqrt D) of Q(sqrt D), normalized
/// by v(sqrt D) = 1. Throws on zero input.
int ramified_valuation(const QuadNum& x, long D);

}  // namespace teichfuchs
