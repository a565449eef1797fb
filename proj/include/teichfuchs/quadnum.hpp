#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "teichfuchs/errors.hpp"

namespace teichfuchs {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
/// Values are composable only when their discriminants match; mixing
/// discriminants throws MixedDiscriminant rather than coercing.
class QuadNum {
public:
    QuadNum() : disc_(0) {}
    QuadNum(Rat a, Rat b, long disc) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {}
    static QuadNum rational(Rat a, long disc) { return QuadNum(std::move(a), 0, disc); }
    static QuadNum integer(long v, long disc) { return QuadNum(rat(v), 0, disc); }
    static QuadNum sqrt_d(long disc) { return QuadNum(0, 1, disc); }
    static QuadNum zero(long disc) { return QuadNum(0, 0, disc); }
    static QuadNum one(long disc) { return QuadNum(1, 0, disc); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long disc() const { return disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadNum conj() const { return QuadNum(a_, -b_, disc_); }
    Rat norm() const { return a_ * a_ - disc_ * b_ * b_; }
    Rat trace() const { return 2 * a_; }
    QuadNum inv() const;

    QuadNum operator-() const { return QuadNum(-a_, -b_, disc_); }
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

    friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
    friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        return x.disc_ == y.disc_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    void check(const QuadNum& o) const {
        if (disc_ != o.disc_) throw MixedDiscriminant();
    }

    Rat a_, b_;
    long disc_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

/// Exact square root in Q(sqrt D) if one exists.
bool sqrt_in_field(const QuadNum& x, QuadNum& out);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool rat_sqrt(const Rat& q, Rat& out);

}  // namespace teichfuchs
