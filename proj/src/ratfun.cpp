#include "teichfuchs/ratfun.hpp"

namespace teichfuchs {

void RationalFunction::assign(PolyQ num, PolyQ den) {
    // the zero function is stored fully degenerate (empty num and den) so a
    // discriminant tag is never needed for it
    if (num.is_zero()) {
        num_ = PolyQ{};
        den_ = PolyQ{};
        return;
    }
    if (den.is_zero()) den = PolyQ::constant(QuadNum::one(num.c.front().disc()));
    PolyQ g = gcd(num, den);
    if (g.deg() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    QuadNum li = den.lc().inv();
    num_ = num * li;
    den_ = den * li;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return -y;
    return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return RationalFunction{};
    return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw DivisionByZero("rational function division by zero");
    if (x.is_zero()) return x;
    return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative() const {
    if (is_zero()) return *this;
    return RationalFunction(teichfuchs::derivative(num_) * den_ - num_ * teichfuchs::derivative(den_),
                            den_ * den_);
}

QuadNum RationalFunction::eval(const QuadNum& t) const {
    if (is_zero()) return QuadNum::zero(t.disc());
    QuadNum d = teichfuchs::eval(den_, t);
    if (d.is_zero()) throw PoleAtPoint();
    return teichfuchs::eval(num_, t) / d;
}

int factor_multiplicity(const PolyQ& f, const PolyQ& m) {
    if (f.is_zero()) throw Error("factor_multiplicity of zero polynomial");
    int k = 0;
    PolyQ cur = f;
    while (true) {
        auto [q, r] = divmod(cur, m);
        if (!r.is_zero()) return k;
        cur = q;
        ++k;
    }
}

}  // namespace teichfuchs
