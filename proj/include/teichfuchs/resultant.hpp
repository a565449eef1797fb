#pragma once

#include "teichfuchs/poly.hpp"

namespace teichfuchs {

namespace detail {

template <class T>
struct RingTraits {
    static T div(const T& a, const T& b) { return a * b.inv(); }
    static T one_like(const T& sample) { return sample * sample.inv(); }
};

template <>
struct RingTraits<QuadNum> {
    static QuadNum div(const QuadNum& a, const QuadNum& b) { return a * b.inv(); }
    static QuadNum one_like(const QuadNum& sample) { return QuadNum::one(sample.disc()); }
};

template <class S>
struct RingTraits<Poly<S>> {
    static Poly<S> div(const Poly<S>& a, const Poly<S>& b) { return exact_div(a, b); }
    static Poly<S> one_like(const Poly<S>& sample) {
        for (const auto& v : sample.c)
            if (!v.is_zero()) return Poly<S>::constant(RingTraits<S>::one_like(v));
        throw Error("one_like of zero polynomial");
    }
};

template <class T>
T ring_pow(const T& x, int e, const T& one) {
    T r = one;
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, no divisions.
template <class T>
Poly<T> prem(Poly<T> A, const Poly<T>& B) {
    int e = A.deg() - B.deg() + 1;
    while (!A.is_zero() && A.deg() >= B.deg()) {
        T s = A.lc();
        size_t d = (size_t)(A.deg() - B.deg());
        A = A * B.lc() - detail::shifted(B, d) * s;
        --e;
    }
    for (int i = 0; i < e; ++i) A = A * B.lc();
    return A;
}

}  // namespace detail

/// Resultant by the subresultant polynomial remainder sequence.
/// Sylvester convention: resultant(f, g) = lc(g)^deg(f) * prod f(roots of g).
template <class T>
T resultant(Poly<T> A, Poly<T> B) {
    using Tr = detail::RingTraits<T>;
    if (A.is_zero() || B.is_zero()) throw Error("resultant of the zero polynomial");
    T one = Tr::one_like(A.lc());
    bool neg = false;
    if (A.deg() < B.deg()) {
        std::swap(A, B);
        if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
    }
    if (B.deg() == 0) {
        T r = detail::ring_pow(B.c[0], A.deg(), one);
        return neg ? -r : r;
    }
    T g = one, h = one;
    while (true) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
        Poly<T> R = detail::prem(A, B);
        A = B;
        T gh = g * detail::ring_pow(h, delta, one);
        Poly<T> Bn;
        for (auto& v : R.c) Bn.c.push_back(Tr::div(v, gh));
        Bn.trim();
        B = Bn;
        if (B.is_zero()) return A.c[0] - A.c[0];  // common factor
        g = A.lc();
        if (delta >= 1)
            h = Tr::div(detail::ring_pow(g, delta, one), detail::ring_pow(h, delta - 1, one));
        if (B.deg() == 0) {
            T num = detail::ring_pow(B.c[0], A.deg(), one);
            T r = A.deg() >= 1 ? Tr::div(num, detail::ring_pow(h, A.deg() - 1, one)) : one;
            return neg ? -r : r;
        }
    }
}

/// discriminant = (-1)^(d(d-1)/2) resultant(f, f') / lc(f).
template <class T>
T discriminant(const Poly<T>& f) {
    using Tr = detail::RingTraits<T>;
    if (f.deg() < 1) throw Error("discriminant needs degree >= 1");
    T r = resultant(f, derivative(f));
    int d = f.deg();
    T q = Tr::div(r, f.lc());
    return ((d * (d - 1) / 2) % 2) ? -q : q;
}

}  // namespace teichfuchs
