#include "teichfuchs/quadnum.hpp"

#include <ostream>
#include <sstream>

namespace teichfuchs {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    check(o);
    Rat na = a_ * o.a_ + disc_ * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadNum QuadNum::inv() const {
    Rat n = norm();
    if (n == 0) throw DivisionByZero("inverse of zero in Q(sqrt D)");
    return QuadNum(a_ / n, -b_ / n, disc_);
}

QuadNum& QuadNum::operator/=(const QuadNum& o) { return *this *= o.inv(); }

std::string QuadNum::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) {
    if (x.is_rational()) return os << x.a();
    os << "(" << x.a();
    if (x.b() > 0) os << "+";
    return os << x.b() << "*sqrt(" << x.disc() << "))";
}

bool rat_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    if (q == 0) {
        out = 0;
        return true;
    }
    Int num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn) / Rat(rd);
    return true;
}

bool sqrt_in_field(const QuadNum& x, QuadNum& out) {
    long D = x.disc();
    if (x.is_zero()) {
        out = QuadNum::zero(D);
        return true;
    }
    // (u + v sqrt D)^2 = u^2 + D v^2 + 2uv sqrt D
    if (x.b() == 0) {
        Rat r;
        if (rat_sqrt(x.a(), r)) {
            out = QuadNum(r, 0, D);
            return true;
        }
        Rat v2 = x.a() / D;
        if (rat_sqrt(v2, r)) {
            out = QuadNum(0, r, D);
            return true;
        }
        return false;
    }
    // u^2 and D v^2 are roots of z^2 - a z + D b^2/4
    Rat n = x.norm();
    Rat sn;
    if (!rat_sqrt(n, sn)) return false;
    for (int sign : {1, -1}) {
        Rat u2 = (x.a() + sign * sn) / 2;
        Rat u;
        if (u2 >= 0 && rat_sqrt(u2, u) && u != 0) {
            Rat v = x.b() / (2 * u);
            if (u * u + D * v * v == x.a() && 2 * u * v == x.b()) {
                out = QuadNum(u, v, D);
                return true;
            }
        }
    }
    return false;
}

}  // namespace teichfuchs
