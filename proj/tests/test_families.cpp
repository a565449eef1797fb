#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "teichfuchs/families.hpp"
#include "teichfuchs/numring.hpp"

using namespace teichfuchs;

namespace {

QuadNum tau17() { return QuadNum(rat(31, 2), rat(-7, 2), 17); }

}  // namespace

TEST_CASE("stored model invariants") {
    for (auto [D, eps] : {std::pair{17L, 1}, {17L, 0}, {13L, 1}}) {
        FamilyModel fm = family(D, eps);
        CHECK(fm.c[5] == PolyQ::constant(QuadNum::one(D)));
        for (int k = 0; k <= 5; ++k) {
            CHECK(fm.c[(size_t)k].deg() == 5 - k);
            CHECK(reciprocal_check(fm.c[(size_t)k], 5 - k));
        }
    }
    CHECK_THROWS_AS(family(21, 1), UnsupportedDiscriminant);
}

TEST_CASE("tau times its inverse is one") {
    FamilyModel fm = family(17, 1);
    CHECK(fm.cusps.extra_points[0] * fm.cusps.extra_points[1] == QuadNum::one(17));
}

TEST_CASE("conjugation swaps the cusp sets of the two components") {
    FamilyModel plus = family(17, 1), minus = family(17, 0);
    for (size_t i = 0; i < plus.cusps.extra_points.size(); ++i)
        CHECK(plus.cusps.extra_points[i].conj() == minus.cusps.extra_points[i]);
}

TEST_CASE("fiber evaluation") {
    FamilyModel fm = family(17, 1);
    PolyQ f0 = fiber(fm, QuadNum::zero(17));
    CHECK(f0.deg() == 5);
    CHECK(f0[4] == QuadNum::integer(3, 17));
    PolyQ f1 = fiber(fm, QuadNum::one(17));
    CHECK(f1[4] == QuadNum::integer(6, 17));
    FamilyModel f13 = family(13, 1);
    CHECK(fiber(f13, QuadNum::zero(13))[4] == QuadNum::one(13));
}

TEST_CASE("discriminant factorization D=17") {
    DiscriminantReport rep = discriminant_report(family(17, 1));
    CHECK(rep.pattern_ok);
    CHECK(rep.mult_zero == 5);
    CHECK(rep.mult_one == 4);
    CHECK(rep.mult_cusps == std::vector<int>{3, 3});
    for (long q : rep.unit_norm_primes) CHECK((q == 2 || q == 17));
    // exact match with the closed form: disc = -17^10/2^12 (4+s)^19 ((5+s)/2)
    //   ((5-s)/2)^18 (2t-31+7s)^3 (64t-31-7s)^3 (t-1)^4 t^5
    QuadNum u(rat(4), rat(1), 17), v(rat(5, 2), rat(1, 2), 17);
    QuadNum c = -QuadNum(Rat(Int("2015993900449")) / Rat(4096), 0, 17);  // -17^10/2^12
    for (int i = 0; i < 19; ++i) c *= u;
    c *= v;
    for (int i = 0; i < 18; ++i) c *= v.conj();
    // peeled fashion: both cusp linear factors were monic, so multiply back lc powers
    c *= QuadNum(rat(1L << 3), 0, 17) * QuadNum(rat(1L << 18), 0, 17);  // 2^3 * 64^3
    CHECK(rep.unit == c);
}

TEST_CASE("discriminant factorization D=13") {
    DiscriminantReport rep = discriminant_report(family(13, 1));
    CHECK(rep.pattern_ok);
    CHECK(rep.mult_cusps == std::vector<int>{4});
    for (long q : rep.unit_norm_primes) CHECK((q == 2 || q == 3 || q == 13));
    // unit = -3^12 13^10/2^60 ((-3+s)/2)^30 ((1+s)/2)^6 * 128^4 (the peeled
    // quadratic cusp factor is monic, the printed one has lc 128)
    QuadNum w(rat(-3, 2), rat(1, 2), 13), z(rat(1, 2), rat(1, 2), 13);
    QuadNum c(-rat(531441) * Rat(Int("137858491849")) / Rat(Int("1152921504606846976")), 0, 13);
    for (int i = 0; i < 30; ++i) c *= w;
    for (int i = 0; i < 6; ++i) c *= z;
    c *= QuadNum(Rat(Int("268435456")), 0, 13);  // 128^4
    // the computed discriminant is exactly minus this closed form
    CHECK(rep.unit == -c);
}

TEST_CASE("normal form matching at the cusps, both discriminants") {
    // every finite cusp orbit matches exactly the prototypes of its component,
    // discovered by trying all of them
    for (auto [D, eps] : {std::pair{17L, 1}, {17L, 0}, {13L, 1}}) {
        FamilyModel fm = family(D, eps);
        auto protos = enumerate_prototypes(D);
        int matched_cusps = 0;
        std::vector<QuadNum> pts = {QuadNum::zero(D), QuadNum::one(D)};
        pts.insert(pts.end(), fm.cusps.extra_points.begin(), fm.cusps.extra_points.end());
        for (const auto& t0 : pts) {
            PolyQ fib = fiber(fm, t0);
            bool any = false, spin_hit = false;
            for (const auto& pt : protos) {
                auto rho = match_normal_form(fib, normal_form(pt));
                if (rho) {
                    any = true;
                    CHECK_FALSE(rho->is_zero());
                    if (spin(pt) == fm.eps) spin_hit = true;
                }
            }
            // prototypes differing only in `a` share a normal form, so a cusp
            // may match across components; its own component always appears
            if (any && D == 17 && spin_separates(D)) CHECK(spin_hit);
            if (any) ++matched_cusps;
        }
        if (fm.cusps.pair) {
            auto fibp = fiber(fm, *fm.cusps.pair);
            bool any = false;
            for (const auto& pt : protos) {
                auto rho = match_normal_form(fibp, normal_form(pt));
                if (rho) any = true;
            }
            if (any) ++matched_cusps;
        }
        CHECK(matched_cusps == (D == 17 ? 4 : 3));
    }
}

TEST_CASE("generic smooth fiber does not match any normal form") {
    FamilyModel fm = family(17, 1);
    PolyQ fib = fiber(fm, QuadNum::integer(2, 17));
    for (const auto& pt : enumerate_prototypes(17))
        CHECK_FALSE(match_normal_form(fib, normal_form(pt)).has_value());
}

TEST_CASE("good reduction scan") {
    FamilyModel f17 = family(17, 1);
    CHECK(good_reduction(f17, 5).status == ReductionStatus::good);
    CHECK(good_reduction(f17, 17).status == ReductionStatus::bad_model);
    FamilyModel f13 = family(13, 1);
    CHECK(good_reduction(f13, 3).status == ReductionStatus::bad_model);
    CHECK(good_reduction(f13, 13).status == ReductionStatus::bad_model);
    for (long p = 3; p <= 100; p += 2) {
        if (Int(p) != Int(p)) continue;
        bool isp = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) isp = false;
        if (!isp) continue;
        CHECK((good_reduction(f17, p).status == ReductionStatus::good) == (p != 17));
        CHECK((good_reduction(f13, p).status == ReductionStatus::good) == (p != 3 && p != 13));
    }
}

TEST_CASE("p = D transform") {
    PGoodTransform tr = potentially_good_at_D(family(17, 1));
    CHECK(tr.p == 17);
    CHECK(tr.smooth);
    // w^5 coefficient 1, w^4 empty, w^3 = 5(t^2+3t+1), w^1 = 3(t^2+3t+1)(t^2+7t+1)
    CHECK(tr.ghat[5] == std::vector<long>{1});
    CHECK(tr.ghat[4].empty());
    CHECK(tr.ghat[3] == std::vector<long>{5, 15, 5});
    CHECK(tr.ghat[1] == std::vector<long>{3, 13, 1, 13, 3});
    // the model also carries even-degree terms that the transform keeps
    CHECK(tr.ghat[2] == std::vector<long>{3, 14, 14, 3});
    CHECK(tr.ghat[0] == std::vector<long>{11, 8, 15, 15, 8, 11});
    // the conjugate component reduces identically
    PGoodTransform tr0 = potentially_good_at_D(family(17, 0));
    CHECK(tr0.ghat[3] == tr.ghat[3]);
    CHECK(tr0.ghat[1] == tr.ghat[1]);
    PGoodTransform t13 = potentially_good_at_D(family(13, 1));
    CHECK(t13.smooth);
    CHECK_FALSE(t13.ghat[1].empty());
}

TEST_CASE("j-invariant of the cusp configuration") {
    JInvariantReport r17 = cusp_j_invariant(17);
    CHECK(r17.s == QuadNum(rat(1023, 128), rat(-217, 128), 17));
    CHECK_FALSE(r17.rational);
    JInvariantReport r13 = cusp_j_invariant(13);
    CHECK(r13.s == QuadNum(rat(0), rat(-71, 256), 13));
    CHECK(r13.rational);
    // the six cross-ratio representatives give one j
    QuadNum one = QuadNum::one(17);
    QuadNum chi = (r17.s + one) / (r17.s - one);
    for (const QuadNum& c : {chi, one / chi, one - chi, one / (one - chi), chi / (chi - one),
                             (chi - one) / chi}) {
        QuadNum n = c * c - c + one;
        QuadNum j = QuadNum::integer(256, 17) * n * n * n / (c * c * (c - one) * (c - one));
        CHECK(j == r17.j);
    }
}

TEST_CASE("ramified valuation") {
    CHECK(ramified_valuation(QuadNum::sqrt_d(17), 17) == 1);
    CHECK(ramified_valuation(QuadNum::integer(17, 17), 17) == 2);
    CHECK(ramified_valuation(QuadNum(rat(4), rat(1), 17), 17) == 0);
    CHECK(ramified_valuation(QuadNum(rat(1, 17), rat(0), 17), 17) == -2);
}
