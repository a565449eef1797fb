#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "teichfuchs/teich.hpp"

using namespace teichfuchs;

TEST_CASE("prototype enumeration D=17") {
    auto ps = enumerate_prototypes(17);
    std::vector<Prototype> expect = {{0, 4, 1, 1, 17},  {0, 4, 1, -1, 17}, {0, 2, 2, -1, 17},
                                     {1, 2, 2, -1, 17}, {0, 2, 1, -3, 17}, {0, 1, 2, -3, 17}};
    CHECK(ps == expect);
}

TEST_CASE("prototype enumeration D=13") {
    auto ps = enumerate_prototypes(13);
    std::vector<Prototype> expect = {{0, 3, 1, 1, 13}, {0, 3, 1, -1, 13}, {0, 1, 1, -3, 13}};
    CHECK(ps == expect);
}

TEST_CASE("bad discriminants") {
    CHECK_THROWS_AS(enumerate_prototypes(4), BadDiscriminant);
    CHECK_THROWS_AS(enumerate_prototypes(7), BadDiscriminant);
}

TEST_CASE("prototype constraints hold post hoc") {
    for (long D : {13L, 17L, 21L, 29L, 33L}) {
        for (const auto& p : enumerate_prototypes(D)) {
            CHECK(p.e * p.e + 4 * p.b * p.c == D);
            CHECK(p.b > 0);
            CHECK(p.c > 0);
            CHECK(p.c + p.e < p.b);
            CHECK(p.a >= 0);
            CHECK(p.a < std::gcd(p.b, p.c));
            CHECK(std::gcd(std::gcd(p.a, p.b), std::gcd(p.c, p.e)) == 1);
        }
    }
}

TEST_CASE("spin values for D=17") {
    CHECK(spin({0, 4, 1, 1, 17}) == 0);
    CHECK(spin({0, 4, 1, -1, 17}) == 1);
    CHECK(spin({1, 2, 2, -1, 17}) == 0);
    CHECK(spin({0, 2, 2, -1, 17}) == 1);
    CHECK(spin({0, 2, 1, -3, 17}) == 0);
    CHECK(spin({0, 1, 2, -3, 17}) == 1);
}

TEST_CASE("opposite prototypes always differ in spin") {
    for (long D : {17L, 33L, 41L, 57L}) {
        long b = (D - 1) / 4;
        CHECK(spin({0, b, 1, 1, D}) != spin({0, b, 1, -1, D}));
    }
}

TEST_CASE("both spin classes nonempty when D = 1 mod 8") {
    for (long D : {17L, 33L, 41L}) {
        REQUIRE(spin_separates(D));
        int seen[2] = {0, 0};
        for (const auto& p : enumerate_prototypes(D)) seen[spin(p)]++;
        CHECK(seen[0] > 0);
        CHECK(seen[1] > 0);
    }
}

TEST_CASE("normal form of (0,4,1,1)") {
    CuspNormalForm nf = normal_form({0, 4, 1, 1, 17});
    CHECK(nf.lambda_sq == QuadNum(rat(9, 2), rat(1, 2), 17));
    // mu = lambda (lambda conj lambda - b^2)/(lambda - conj lambda) = -lambda b(b+c)/sqrtD
    CHECK(nf.mu == QuadNum(rat(-10), rat(-10, 17), 17));
    QuadNum sqrtD = QuadNum::sqrt_d(17);
    QuadNum lambda(rat(1, 2), rat(1, 2), 17);
    CHECK(nf.mu == -(lambda * QuadNum::integer(4 * 5, 17) / sqrtD));
}

TEST_CASE("normal form quintic structure") {
    for (long D : {13L, 17L, 21L, 29L, 33L}) {
        for (const auto& p : enumerate_prototypes(D)) {
            CuspNormalForm nf = normal_form(p);
            CHECK(nf.quintic.deg() == 5);
            CHECK(nf.quintic.lc().is_one());
            CHECK_FALSE(nf.lambda_sq.is_zero());
            CHECK_FALSE(nf.b_sq.is_zero());
            CHECK_FALSE((nf.b_sq == nf.lambda_sq));  // lambda^2 is irrational
            auto roots = squarefree_multiple_roots(nf.quintic);
            int doubles = 0, simples = 0;
            for (auto& fm : roots) {
                if (fm.multiplicity == 2) ++doubles;
                if (fm.multiplicity == 1) ++simples;
            }
            CHECK(doubles == 2);
            CHECK(simples == 1);
        }
    }
}

TEST_CASE("conjugate prototypes have conjugate normal forms") {
    CuspNormalForm plus = normal_form({0, 4, 1, 1, 17});
    CuspNormalForm minus = normal_form({0, 4, 1, -1, 17});
    CHECK(plus.lambda_sq.conj() == minus.lambda_sq);
    CHECK(plus.mu.conj() == minus.mu);
}

TEST_CASE("galois spin swap certificate") {
    GaloisSwapReport rep = galois_spin_swap_certificate(17);
    CHECK(rep.passed);
    QuadNum one_plus(rat(1), rat(1), 17);
    CHECK(rep.mu_ratio == one_plus * one_plus / QuadNum::integer(16, 17));
    CHECK(rep.obstruction_ratio == rat(4));
    CHECK_THROWS_AS(galois_spin_swap_certificate(25), NotApplicable);
    CHECK_THROWS_AS(galois_spin_swap_certificate(13), NotApplicable);
    for (long D : {33L, 41L, 57L, 73L}) CHECK(galois_spin_swap_certificate(D).passed);
}

TEST_CASE("stratum constants") {
    StratumConstants s = stratum_constants(Stratum::double_zero, 5);
    CHECK(s.lambda2 == rat(1, 3));
    CHECK(s.gamma1 == rat(3, 2));
    CHECK(s.gamma2 == rat(1, 2));
    StratumConstants s2 = stratum_constants(Stratum::two_simple_zeros, 5);
    CHECK(s2.lambda2 == rat(1, 2));
    CHECK(s2.gamma2 == rat(3, 4));
    CHECK(stratum_constants(Stratum::double_zero, 4).gamma1 == rat(1));
}

TEST_CASE("triangle obstruction") {
    CHECK(triangle_obstruction(5));
    CHECK(triangle_obstruction(8));
    CHECK(triangle_obstruction(12));
    CHECK_FALSE(triangle_obstruction(13));
    CHECK_FALSE(triangle_obstruction(17));
    // all admissible fundamental D up to 40
    std::vector<long> truthy;
    for (long D = 5; D <= 40; ++D) {
        if ((D % 4 != 0 && D % 4 != 1)) continue;
        if (!is_fundamental_discriminant(D)) continue;
        if (triangle_obstruction(D)) truthy.push_back(D);
    }
    CHECK(truthy == std::vector<long>{5, 8, 12});
    // non-fundamental discriminants reduce: 20 = 4*5 has trace field Q(sqrt5)
    CHECK(triangle_obstruction(20));
}
