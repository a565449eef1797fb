#include "teichfuchs/modring.hpp"

#include <omp.h>

namespace teichfuchs {

ModPoly mod_add(const ModPoly& f, const ModPoly& g) {
    ModPoly r{f.ctx, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = pq_add(f.ctx, f.at(i), g.at(i));
    r.trim();
    return r;
}

ModPoly mod_sub(const ModPoly& f, const ModPoly& g) {
    ModPoly r{f.ctx, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = pq_sub(f.ctx, f.at(i), g.at(i));
    r.trim();
    return r;
}

ModPoly mod_mul(const ModPoly& f, const ModPoly& g) {
    ModPoly r{f.ctx, {}};
    if (f.is_zero() || g.is_zero()) return r;
    r.c.assign(f.c.size() + g.c.size() - 1, PadicQuad{});
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = pq_add(f.ctx, r.c[i + j], pq_mul(f.ctx, f.c[i], g.c[j]));
    }
    r.trim();
    return r;
}

ModPoly mod_scal(const ModPoly& f, PadicQuad s) {
    ModPoly r{f.ctx, {}};
    for (const auto& v : f.c) r.c.push_back(pq_mul(f.ctx, v, s));
    r.trim();
    return r;
}

ModPoly mod_deriv(const ModPoly& f) {
    ModPoly r{f.ctx, {}};
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(pq_scal(f.ctx, f.c[i], (u64)(i % f.ctx.pn)));
    r.trim();
    return r;
}

ModPoly mod_pow(const ModPoly& f, u64 e) {
    ModPoly r{f.ctx, {PadicQuad{1, 0}}};
    ModPoly base = f;
    while (e) {
        if (e & 1) r = mod_mul(r, base);
        base = mod_mul(base, base);
        e >>= 1;
    }
    return r;
}

bool mod_eq(const ModPoly& f, const ModPoly& g) { return mod_sub(f, g).is_zero(); }

ModPoly mod_drop_to_prime(const ModPoly& f) {
    PrimeContext c1(f.ctx.D, f.ctx.p, 1);
    ModPoly r{c1, {}};
    for (const auto& v : f.c) r.c.push_back({v.c0 % (u64)f.ctx.p, v.c1 % (u64)f.ctx.p});
    r.trim();
    return r;
}

ModPoly reduce_poly(const PolyQ& f, const PrimeContext& ctx) {
    ModPoly r{ctx, {}};
    for (const auto& v : f.c) r.c.push_back(reduce_mod(v, ctx));
    r.trim();
    return r;
}

PadicQuad mod_eval(const ModPoly& f, PadicQuad x) {
    PadicQuad acc{};
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        acc = pq_add(f.ctx, pq_mul(f.ctx, acc, x), *it);
    return acc;
}

ModPoly mod_gcd_field(ModPoly f, ModPoly g) {
    if (f.ctx.n != 1) throw Error("mod_gcd_field needs n = 1");
    while (!g.is_zero()) {
        // f mod g over the field
        PadicQuad li = pq_inv(g.ctx, g.c.back());
        while (!f.is_zero() && f.c.size() >= g.c.size()) {
            PadicQuad coef = pq_mul(f.ctx, f.c.back(), li);
            size_t d = f.c.size() - g.c.size();
            for (size_t i = 0; i < g.c.size(); ++i)
                f.c[d + i] = pq_sub(f.ctx, f.c[d + i], pq_mul(f.ctx, coef, g.c[i]));
            f.trim();
        }
        std::swap(f, g);
    }
    if (!f.is_zero()) f = mod_scal(f, pq_inv(f.ctx, f.c.back()));
    return f;
}

namespace {

ModBivar bivar_one(const PrimeContext& ctx) {
    ModBivar r;
    r.ctx = ctx;
    r.nx = 1;
    r.nt = 1;
    r.c0 = {1};
    r.c1 = {0};
    return r;
}

}  // namespace

ModBivar bivar_power_serial(const ModBivar& g, u64 e) {
    const PrimeContext& ctx = g.ctx;
    u64 pn = ctx.pn, Dm = ctx.Dmod;
    ModBivar cur = bivar_one(ctx);
    for (u64 step = 0; step < e; ++step) {
        ModBivar nxt;
        nxt.ctx = ctx;
        nxt.nx = cur.nx + 5;
        nxt.nt = cur.nt + 5;
        nxt.c0.assign((size_t)nxt.nx * nxt.nt, 0);
        nxt.c1.assign((size_t)nxt.nx * nxt.nt, 0);
        for (int gi = 0; gi < 6; ++gi)
            for (int gj = 0; gj < 6; ++gj) {
                u64 a0 = g.get0(gi, gj), a1 = g.get1(gi, gj);
                if (a0 == 0 && a1 == 0) continue;
                for (int i = 0; i < cur.nx; ++i)
                    for (int j = 0; j < cur.nt; ++j) {
                        u64 b0 = cur.get0(i, j), b1 = cur.get1(i, j);
                        if (b0 == 0 && b1 == 0) continue;
                        u64& o0 = nxt.at0(gi + i, gj + j);
                        u64& o1 = nxt.at1(gi + i, gj + j);
                        o0 = (o0 + a0 * b0 + Dm * (a1 * b1 % pn)) % pn;
                        o1 = (o1 + a0 * b1 + a1 * b0) % pn;
                    }
            }
        cur = std::move(nxt);
    }
    return cur;
}

ModBivar bivar_power_parallel(const ModBivar& g, u64 e) {
    const PrimeContext& ctx = g.ctx;
    const u64 pn = ctx.pn, Dm = ctx.Dmod;
    // 36 accumulated products of residues < pn stay below 2^64 when pn < 2^28,
    // so the hot path reduces once per output cell
    const bool deferred = pn < (u64(1) << 28);
    struct Entry {
        int gi, gj;
        u64 a0, a1;
    };
    std::vector<Entry> entries;
    for (int gi = 0; gi < 6; ++gi)
        for (int gj = 0; gj < 6; ++gj)
            if (g.get0(gi, gj) || g.get1(gi, gj))
                entries.push_back({gi, gj, g.get0(gi, gj), g.get1(gi, gj)});
    ModBivar cur = bivar_one(ctx);
    for (u64 step = 0; step < e; ++step) {
        ModBivar nxt;
        nxt.ctx = ctx;
        nxt.nx = cur.nx + 5;
        nxt.nt = cur.nt + 5;
        nxt.c0.assign((size_t)nxt.nx * nxt.nt, 0);
        nxt.c1.assign((size_t)nxt.nx * nxt.nt, 0);
        const int cnx = cur.nx, cnt = cur.nt, nnt = nxt.nt;
        const u64* c0 = cur.c0.data();
        const u64* c1 = cur.c1.data();
        u64* o0 = nxt.c0.data();
        u64* o1 = nxt.c1.data();
        const Entry* ent = entries.data();
        const int nent = (int)entries.size();
        const long work = (long)nxt.nx * nxt.nt;
#pragma omp parallel for schedule(static) if (work > 20000)
        for (int I = 0; I < cnx + 5; ++I) {
            for (int J = 0; J < cnt + 5; ++J) {
                u64 acc0 = 0, acc1 = 0;
                if (deferred) {
                    for (int m = 0; m < nent; ++m) {
                        int i = I - ent[m].gi, j = J - ent[m].gj;
                        if (i < 0 || i >= cnx || j < 0 || j >= cnt) continue;
                        size_t idx = (size_t)i * cnt + (size_t)j;
                        acc0 += ent[m].a0 * c0[idx] + Dm * (ent[m].a1 * c1[idx] % pn);
                        acc1 += ent[m].a0 * c1[idx] + ent[m].a1 * c0[idx];
                    }
                    acc0 %= pn;
                    acc1 %= pn;
                } else {
                    for (int m = 0; m < nent; ++m) {
                        int i = I - ent[m].gi, j = J - ent[m].gj;
                        if (i < 0 || i >= cnx || j < 0 || j >= cnt) continue;
                        size_t idx = (size_t)i * cnt + (size_t)j;
                        u64 b0 = c0[idx], b1 = c1[idx];
                        acc0 = (acc0 + (unsigned __int128)ent[m].a0 * b0 % pn +
                                (unsigned __int128)Dm * ((unsigned __int128)ent[m].a1 * b1 % pn)) %
                               pn;
                        acc1 = (acc1 + (unsigned __int128)ent[m].a0 * b1 % pn +
                                (unsigned __int128)ent[m].a1 * b0 % pn) %
                               pn;
                    }
                }
                o0[(size_t)I * nnt + (size_t)J] = acc0;
                o1[(size_t)I * nnt + (size_t)J] = acc1;
            }
        }
        cur = std::move(nxt);
    }
    return cur;
}

ModPoly bivar_x_coefficient(const ModBivar& f, long xdeg) {
    ModPoly r{f.ctx, {}};
    if (xdeg < 0 || xdeg >= f.nx) return r;
    for (int j = 0; j < f.nt; ++j) r.c.push_back({f.get0((int)xdeg, j), f.get1((int)xdeg, j)});
    r.trim();
    return r;
}

}  // namespace teichfuchs
