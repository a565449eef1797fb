#pragma once

#include "teichfuchs/poly.hpp"

namespace teichfuchs {

/// Quotient of polynomials over Q(sqrt D), kept reduced with monic denominator.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(PolyQ num, PolyQ den) { assign(std::move(num), std::move(den)); }
    static RationalFunction of(PolyQ num) { return RationalFunction(std::move(num), PolyQ{}); }
    static RationalFunction constant(const QuadNum& v) {
        return RationalFunction(PolyQ::constant(v), PolyQ{});
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return is_zero() || den_.deg() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
    RationalFunction inv() const;
    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    RationalFunction derivative() const;
    QuadNum eval(const QuadNum& t) const;  // throws PoleAtPoint on a pole

private:
    void assign(PolyQ num, PolyQ den);

    PolyQ num_;
    PolyQ den_;  // monic (empty together with num_ for the zero function)
};

/// Multiplicity of the monic irreducible factor m in f (0 if coprime).
int factor_multiplicity(const PolyQ& f, const PolyQ& m);

}  // namespace teichfuchs
