#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tiltlab/tilt.hpp"

using namespace tiltlab;
using tiltlab::testing::random_divisor;
using tiltlab::testing::random_integral_class;
using tiltlab::testing::random_rational;

namespace {

KClass kc(const SurfaceData& s, long c0, long h_mult, Rational c2) {
    return {Rational(c0), Rational(h_mult) * s.H, std::move(c2)};
}

StabilityParams at(Rational alpha, Rational beta, const SurfaceData& s) {
    return StabilityParams(std::move(alpha), std::move(beta), DivisorClass::zero(s.rank));
}

Rational random_positive(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 8);
    std::uniform_int_distribution<long> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("stability params require positive alpha") {
    SurfaceData s1 = surface_s1();
    CHECK_THROWS_AS(at(Rational(0), Rational(0), s1), std::invalid_argument);
    CHECK_THROWS_AS(at(Rational(-1), Rational(0), s1), std::invalid_argument);
    CHECK_NOTHROW(at(Rational(1, 100), Rational(-5), s1));
}

TEST_CASE("slope of pinned classes") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    CHECK(mu_B(kc(s1, 2, 1, Rational(0)), zero, s1) == SlopeValue::finite(Rational(1, 2)));
    CHECK(mu_B(kc(s1, 0, 1, Rational(0)), zero, s1) == SlopeValue::plus_infinity());
    CHECK(mu_B(kc(s1, 0, 0, Rational(1)), zero, s1) == SlopeValue::plus_infinity());
}

TEST_CASE("twisting shifts the slope by a constant") {
    std::mt19937_64 rng(21);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        DivisorClass zero = DivisorClass::zero(s.rank);
        for (int i = 0; i < 50; ++i) {
            KClass a = random_integral_class(rng, s);
            if (a.ch0 == 0) continue;
            DivisorClass B = random_divisor(rng, s, -4, 4);
            SlopeValue untwisted = mu_B(a, zero, s);
            SlopeValue twisted = mu_B(a, B, s);
            Rational shift = intersect(s.H, B, s) / degree(s);
            REQUIRE(untwisted.is_finite());
            REQUIRE(twisted.is_finite());
            CHECK(twisted.value == untwisted.value - shift);
        }
    }
}

TEST_CASE("central charge on pinned classes") {
    SurfaceData s1 = surface_s1();
    KClass point = kc(s1, 0, 0, Rational(1));
    for (auto [alpha, beta] : {std::pair{Rational(1), Rational(0)},
                               std::pair{Rational(1, 2), Rational(-3)},
                               std::pair{Rational(3), Rational(2)}}) {
        CentralChargeValue z = central_charge(point, at(alpha, beta, s1), s1);
        CHECK(z.re == -1);
        CHECK(z.im == 0);
    }

    CentralChargeValue zv = central_charge(kc(s1, 2, 0, Rational(-1)), at(Rational(1), Rational(0), s1), s1);
    CHECK(zv.im == 0);

    CentralChargeValue zo = central_charge(k_unit(s1), at(Rational(1), Rational(0), s1), s1);
    CHECK(zo.re == Rational(1, 2));
    CHECK(zo.im == 0);
}

TEST_CASE("tilt slope conventions") {
    SurfaceData s1 = surface_s1();
    KClass v = kc(s1, 2, 0, Rational(-1));
    CHECK(tilt_slope(v, at(Rational(1), Rational(0), s1), s1) == SlopeValue::plus_infinity());
    CHECK(tilt_slope(point_class(s1), at(Rational(2), Rational(1), s1), s1) ==
          SlopeValue::plus_infinity());

    StabilityParams p = at(Rational(1), Rational(-1), s1);
    CentralChargeValue z = central_charge(k_unit(s1), p, s1);
    REQUIRE(z.im != 0);
    SlopeValue nu = tilt_slope(k_unit(s1), p, s1);
    REQUIRE(nu.is_finite());
    CHECK(nu.value == -z.re / z.im);
    CHECK(nu.value == 0);  // re = (1-1)/2 = 0, im = 1
}

TEST_CASE("tilt slope is invariant under positive scaling") {
    std::mt19937_64 rng(22);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        for (int i = 0; i < 60; ++i) {
            KClass a = random_integral_class(rng, s);
            Rational lambda = random_positive(rng);
            StabilityParams p(random_positive(rng), random_rational(rng, -4, 4),
                              random_divisor(rng, s, -2, 2));
            CHECK(tilt_slope(a, p, s) == tilt_slope(lambda * a, p, s));
        }
    }
}

TEST_CASE("vertical wall location") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    CHECK(vertical_beta(kc(s1, 2, 0, Rational(-1)), zero, s1) == 0);
    CHECK(vertical_beta(kc(s1, 2, 1, Rational(0)), zero, s1) == Rational(1, 2));
    CHECK(vertical_beta(kc(s1, 2, 1, Rational(0)), s1.H, s1) == Rational(-1, 2));
    CHECK_THROWS_AS(vertical_beta(kc(s1, 0, 1, Rational(0)), zero, s1), std::domain_error);
    CHECK_THROWS_AS(vertical_beta(kc(s1, -1, 0, Rational(0)), zero, s1), std::domain_error);
}

TEST_CASE("the charge of v is real along its vertical wall") {
    std::mt19937_64 rng(23);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        for (int i = 0; i < 40; ++i) {
            KClass v = tiltlab::testing::random_positive_rank_class(rng, s);
            DivisorClass B = random_divisor(rng, s, -3, 3);
            Rational beta0 = vertical_beta(v, B, s);
            for (int k = 0; k < 3; ++k) {
                StabilityParams p(random_positive(rng), beta0, B);
                CHECK(central_charge(v, p, s).im == 0);
                Rational lambda = random_positive(rng);
                CHECK(central_charge(lambda * v, p, s).im == 0);
            }
        }
    }
}

TEST_CASE("support form on pinned classes") {
    SurfaceData s1 = surface_s1();
    CHECK(discriminant(k_unit(s1), s1) == 0);
    CHECK(discriminant(point_class(s1), s1) == 0);
    CHECK(discriminant(kc(s1, 1, 0, Rational(-1)), s1) == 2);
}

TEST_CASE("imaginary-part sign classification") {
    SurfaceData s1 = surface_s1();
    KClass v = kc(s1, 2, 0, Rational(-1));
    CHECK(vertical_locus_kind(v, at(Rational(1), Rational(0), s1), s1) == LocusSign::zero);
    KClass torsion = kc(s1, 0, 1, Rational(0));
    CHECK(vertical_locus_kind(torsion, at(Rational(1), Rational(2), s1), s1) ==
          LocusSign::positive);
    CHECK(vertical_locus_kind(torsion, at(Rational(3), Rational(-2), s1), s1) ==
          LocusSign::positive);
    CHECK(vertical_locus_kind(k_unit(s1), at(Rational(1), Rational(1), s1), s1) ==
          LocusSign::negative);
}

TEST_CASE("twisted degree is additive across decompositions") {
    std::mt19937_64 rng(24);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        for (int i = 0; i < 40; ++i) {
            KClass e = random_integral_class(rng, s);
            KClass f = random_integral_class(rng, s);
            DivisorClass B = random_divisor(rng, s, -3, 3);
            KClass g = e + f;
            Rational de = intersect(s.H, twist_B(e, B, s).ch1, s);
            Rational df = intersect(s.H, twist_B(f, B, s).ch1, s);
            Rational dg = intersect(s.H, twist_B(g, B, s).ch1, s);
            CHECK(dg == de + df);
        }
    }
}
