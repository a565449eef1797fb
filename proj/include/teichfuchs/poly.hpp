#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "teichfuchs/errors.hpp"
#include "teichfuchs/quadnum.hpp"

namespace teichfuchs {

/// Dense univariate polynomial, index = degree. The zero polynomial is the
/// empty coefficient vector; a trailing zero coefficient is never stored.
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> cc) : c(std::move(cc)) { trim(); }
    static Poly constant(T v) {
        Poly p;
        if (!v.is_zero()) p.c.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
    const T& lc() const { return c.back(); }
    const T& operator[](size_t i) const { return c[i]; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

template <class T>
bool operator==(const Poly<T>& f, const Poly<T>& g) {
    return f.c == g.c;
}

template <class T>
Poly<T>& operator+=(Poly<T>& f, const Poly<T>& g);
template <class T>
Poly<T>& operator-=(Poly<T>& f, const Poly<T>& g);

template <class T>
Poly<T> operator+(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> r;
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < f.c.size() && i < g.c.size())
            r.c[i] = f.c[i] + g.c[i];
        else if (i < f.c.size())
            r.c[i] = f.c[i];
        else
            r.c[i] = g.c[i];
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& f) {
    Poly<T> r = f;
    for (auto& v : r.c) v = -v;
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& f, const Poly<T>& g) {
    return f + (-g);
}

template <class T>
Poly<T>& operator+=(Poly<T>& f, const Poly<T>& g) {
    f = f + g;
    return f;
}

template <class T>
Poly<T>& operator-=(Poly<T>& f, const Poly<T>& g) {
    f = f - g;
    return f;
}

namespace detail {

template <class T>
Poly<T> mul_schoolbook(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> r;
    if (f.is_zero() || g.is_zero()) return r;
    r.c.assign(f.c.size() + g.c.size() - 1, f.c[0] - f.c[0]);  // zeros of the right ring
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j].is_zero()) continue;
            r.c[i + j] += f.c[i] * g.c[j];
        }
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> shifted(const Poly<T>& f, size_t k) {
    if (f.is_zero()) return f;
    Poly<T> r;
    r.c.reserve(f.c.size() + k);
    for (size_t i = 0; i < k; ++i) r.c.push_back(f.c[0] - f.c[0]);
    for (auto& v : f.c) r.c.push_back(v);
    return r;
}

}  // namespace detail

/// Schoolbook below degree 64, Karatsuba above.
template <class T>
Poly<T> operator*(const Poly<T>& f, const Poly<T>& g) {
    constexpr size_t kKaratsubaCutoff = 64;
    if (f.is_zero() || g.is_zero()) return Poly<T>{};
    if (f.c.size() < kKaratsubaCutoff || g.c.size() < kKaratsubaCutoff)
        return detail::mul_schoolbook(f, g);
    size_t h = std::max(f.c.size(), g.c.size()) / 2;
    auto split = [&](const Poly<T>& p) {
        Poly<T> lo, hi;
        for (size_t i = 0; i < p.c.size(); ++i)
            (i < h ? lo.c : hi.c).push_back(p.c[i]);
        lo.trim();
        hi.trim();
        return std::pair{lo, hi};
    };
    auto [f0, f1] = split(f);
    auto [g0, g1] = split(g);
    Poly<T> p0 = f0 * g0;
    Poly<T> p2 = f1 * g1;
    Poly<T> pm = (f0 + f1) * (g0 + g1) - p0 - p2;
    return p0 + detail::shifted(pm, h) + detail::shifted(p2, 2 * h);
}

template <class T>
Poly<T> operator*(const Poly<T>& f, const T& s) {
    Poly<T> r = f;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
}

/// Quotient and remainder over a field (divisor leading coefficient inverted).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly<T> q, r = f;
    T li = g.lc().inv();
    while (!r.is_zero() && r.deg() >= g.deg()) {
        T coef = r.lc() * li;
        size_t d = (size_t)(r.deg() - g.deg());
        if (q.c.size() <= d) q.c.resize(d + 1, coef - coef);
        q.c[d] += coef;
        for (size_t i = 0; i < g.c.size(); ++i) r.c[d + i] -= coef * g.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// Exact division; throws if the remainder is nonzero.
template <class T>
Poly<T> exact_div(const Poly<T>& f, const Poly<T>& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
    return q;
}

template <class T>
Poly<T> monic(const Poly<T>& f) {
    if (f.is_zero()) return f;
    return f * f.lc().inv();
}

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> f, Poly<T> g) {
    while (!g.is_zero()) {
        auto r = divmod(f, g).second;
        f = g;
        g = r;
    }
    return monic(f);
}

template <class T>
Poly<T> derivative(const Poly<T>& f) {
    Poly<T> r;
    for (int i = 1; i <= f.deg(); ++i) {
        T v = f.c[(size_t)i];
        T s = v;
        for (int j = 1; j < i; ++j) s += v;  // i * v without an int constructor on T
        r.c.push_back(s);
    }
    r.trim();
    return r;
}

template <class T>
T eval(const Poly<T>& f, const T& x) {
    T acc = x - x;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Evaluate a Poly<T> at a point of a (possibly different) scalar ring S,
/// mapping coefficients through `lift`.
template <class T, class S, class F>
S eval_map(const Poly<T>& f, const S& x, F&& lift) {
    S acc = x - x;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
}

template <class T>
Poly<T> pow(const Poly<T>& f, unsigned e) {
    if (f.is_zero()) throw Error("pow of zero polynomial");
    Poly<T> r = Poly<T>::constant(f.lc() * f.lc().inv());
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

using PolyQ = Poly<QuadNum>;

inline PolyQ polyq(std::vector<QuadNum> cc) { return PolyQ(std::move(cc)); }

/// t - r as a monic linear polynomial.
inline PolyQ linear_root(const QuadNum& r) {
    return PolyQ({-r, QuadNum::one(r.disc())});
}

/// Truncated power series c_0 + c_1 t + ... + c_N t^N.
template <class T>
struct SeriesPrefix {
    std::vector<T> c;  // length N+1

    int order() const { return (int)c.size() - 1; }
};

template <class T>
SeriesPrefix<T> series_mul(const SeriesPrefix<T>& f, const SeriesPrefix<T>& g) {
    SeriesPrefix<T> r;
    size_t n = std::min(f.c.size(), g.c.size());
    r.c.assign(n, f.c.at(0) - f.c.at(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n && j < g.c.size(); ++j)
            if (i < f.c.size()) r.c[i + j] += f.c[i] * g.c[j];
    return r;
}

template <class T>
SeriesPrefix<T> series_derivative(const SeriesPrefix<T>& f) {
    SeriesPrefix<T> r;
    for (size_t i = 1; i < f.c.size(); ++i) {
        T v = f.c[i];
        T s = v;
        for (size_t j = 1; j < i; ++j) s += v;
        r.c.push_back(s);
    }
    return r;
}

template <class T>
SeriesPrefix<T> series_invert(const SeriesPrefix<T>& f) {
    if (f.c.empty() || f.c[0].is_zero()) throw NonUnitConstantTerm();
    SeriesPrefix<T> r;
    T c0i = f.c[0].inv();
    r.c.assign(f.c.size(), f.c[0] - f.c[0]);
    r.c[0] = c0i;
    for (size_t k = 1; k < f.c.size(); ++k) {
        T acc = f.c[0] - f.c[0];
        for (size_t j = 1; j <= k && j < f.c.size(); ++j) acc += f.c[j] * r.c[k - j];
        r.c[k] = -(acc * c0i);
    }
    return r;
}

/// Substitute a polynomial with zero constant term into a series prefix.
template <class T>
SeriesPrefix<T> series_compose_poly(const SeriesPrefix<T>& f, const Poly<T>& p) {
    if (!p.is_zero() && !p.c[0].is_zero())
        throw Error("series_compose_poly: substitution needs zero constant term");
    size_t n = f.c.size();
    SeriesPrefix<T> r;
    r.c.assign(n, f.c.at(0) - f.c.at(0));
    // Horner from the top, truncating to n coefficients
    SeriesPrefix<T> acc;
    acc.c.assign(n, f.c.at(0) - f.c.at(0));
    SeriesPrefix<T> ps;
    ps.c.assign(n, f.c.at(0) - f.c.at(0));
    for (size_t i = 0; i < std::min(n, p.c.size()); ++i) ps.c[i] = p.c[i];
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
        acc = series_mul(acc, ps);
        acc.c.resize(n, f.c.at(0) - f.c.at(0));
        acc.c[0] += *it;
    }
    return acc;
}

}  // namespace teichfuchs
