#pragma once

#include <array>
#include <variant>
#include <vector>

#include "teichfuchs/families.hpp"
#include "teichfuchs/ratfun.hpp"

namespace teichfuchs {

/// Class of P(x) dx/y in H^1_dR of the generic fiber, written in the basis
/// {x^i dx/y : i = 0..3} of the quintic model.
using H1Class = std::array<RationalFunction, 4>;

struct InfinityTag {
    friend bool operator==(const InfinityTag&, const InfinityTag&) = default;
};

enum class SingKind { cusp, ks_zero, infinity };

struct SingularPoint {
    std::variant<QuadNum, AlgebraicPoint, InfinityTag> loc;
    std::pair<Rat, Rat> exponents;
    SingKind kind = SingKind::cusp;
};

/// Second-order Fuchsian operator u'' + A u' + B u with its singularity record.
struct FuchsOp {
    long D = 0;
    RationalFunction A, B;
    std::vector<SingularPoint> singularities;

    int r() const { return (int)singularities.size(); }
};

/// Reduce P dx/y^m (m odd, P with rational-function coefficients in t) modulo
/// exact forms to the degree <= 3 basis. Throws SingularFiber when the generic
/// fiber is singular (g and dg/dx share a factor).
H1Class dr_reduce(const std::vector<RationalFunction>& P, int m, const FamilyModel& fm);

/// Classes of the Gauss-Manin derivatives of omega_i = x^{i-1} dx/y:
/// order 0 -> [omega_i], 1 -> [nabla omega_i], 2 -> [nabla^2 omega_i].
H1Class gauss_manin(const FamilyModel& fm, int i, int order);

/// Derive the operator annihilating omega_i by solving
/// c0 [omega] + c1 [nabla omega] + [nabla^2 omega] = 0. Also verifies that all
/// four basis coordinates are annihilated (the exactness certificate); a
/// failure would mean omega_i is not an eigenform and raises NotRankTwo.
FuchsOp derive_ode(const FamilyModel& fm, int i);

/// Local exponents at a finite point, an unsplit quadratic point, or infinity.
/// Regular points report (0, 1).
std::pair<Rat, Rat> local_exponents(const FuchsOp& L, const QuadNum& t0);
std::pair<Rat, Rat> local_exponents(const FuchsOp& L, const AlgebraicPoint& pt);
std::pair<Rat, Rat> local_exponents_at_infinity(const FuchsOp& L);

/// The operator annihilating f*u for u annihilated by L; every local exponent
/// pair shifts by -ord(f) at finite points and deg num - deg den at infinity.
FuchsOp gauge_transform(const FuchsOp& L, const RationalFunction& f);

/// Sum of all recorded exponents equals r - 2.
bool fuchs_relation_check(const FuchsOp& L);

/// Apply L to a power series prefix; the result is exact to the order the
/// prefix supports (used by tests as the annihilation certificate).
bool annihilates(const FuchsOp& L, const H1Class& w0, const H1Class& w1, const H1Class& w2);

/// A_inf, B_inf of the operator rewritten in the coordinate u = 1/t.
std::pair<RationalFunction, RationalFunction> at_infinity(const FuchsOp& L);

/// Frozen reference coefficients of the four operators (A and B only), used
/// to cross-check derive_ode. For D = 13, i = 2 the two lowest numerator
/// coefficients of B are the corrected values; the others are as published.
std::pair<RationalFunction, RationalFunction> reference_operator(long D, int i);

}  // namespace teichfuchs
