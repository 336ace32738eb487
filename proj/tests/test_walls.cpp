#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tiltlab/walls.hpp"

using namespace tiltlab;
using tiltlab::testing::random_divisor;
using tiltlab::testing::random_integral_class;
using tiltlab::testing::random_rational;

namespace {

KClass kc(const SurfaceData& s, long c0, long h_mult, Rational c2) {
    return {Rational(c0), Rational(h_mult) * s.H, std::move(c2)};
}

// Rational points of the locus for sampling: vertical walls take three alpha
// values; semicircles take three beta values strictly between the feet with
// alpha^2 = rho - (beta - c)^2 rational.
void check_three_points(const Wall& wall, const KClass& v, const DivisorClass& B,
                        const SurfaceData& s) {
    if (wall.kind == WallKind::vertical) {
        for (long a : {1L, 2L, 5L}) {
            Rational cross = nu_cross(v, wall.witness,
                                      StabilityParams(Rational(a, 2), wall.beta, B), s);
            CHECK(cross == 0);
        }
        return;
    }
    REQUIRE(wall.kind == WallKind::semicircle);
    REQUIRE(wall.radius_sq > 0);
    for (long k : {-1L, 0L, 1L}) {
        // beta = center + k/2 . sqrt(rho) stays inside the open beta-span;
        // the membership polynomial takes alpha^2, so no square root needed.
        Rational beta = wall.center + Rational(k, 2) * wall.radius_sq;
        Rational off = beta - wall.center;
        Rational alpha_sq = wall.radius_sq - off * off;
        if (alpha_sq <= 0) continue;
        CHECK(nu_cross_alpha_sq(v, wall.witness, B, s, alpha_sq, beta) == 0);
    }
}

}  // namespace

TEST_CASE("wall equation coefficients on a pinned pair") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    KClass w = kc(s1, 1, -1, Rational(1, 2));
    WallEquation eq = wall_equation(v, w, zero, s1);
    CHECK(eq.A == Rational(-1, 2));
    CHECK(eq.Bcoef == Rational(-3, 2));
    CHECK(eq.C == -1);
}

TEST_CASE("slope-equality cross product factors through the wall polynomial") {
    std::mt19937_64 rng(31);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        for (int i = 0; i < 80; ++i) {
            KClass v = random_integral_class(rng, s);
            KClass w = random_integral_class(rng, s);
            DivisorClass B = random_divisor(rng, s, -2, 2);
            Rational alpha = random_rational(rng, 1, 6);
            Rational beta = random_rational(rng, -5, 5);
            Rational direct = nu_cross(v, w, StabilityParams(alpha, beta, B), s);
            Rational through_poly =
                alpha * nu_cross_alpha_sq(v, w, B, s, alpha * alpha, beta);
            CHECK(direct == through_poly);
        }
    }
}

TEST_CASE("proportional classes share slopes everywhere") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 2, 1, Rational(-1));
    Wall wall = numerical_wall(v, Rational(3) * v, zero, s1);
    CHECK(wall.kind == WallKind::everywhere);
}

TEST_CASE("equal twisted slopes give the vertical wall") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 2, 0, Rational(-1));
    KClass w = k_unit(s1);
    Wall wall = numerical_wall(v, w, zero, s1);
    REQUIRE(wall.kind == WallKind::vertical);
    CHECK(wall.beta == 0);
    check_three_points(wall, v, zero, s1);
}

TEST_CASE("generic pair gives a semicircle with pinned center and radius") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    KClass w = kc(s1, 1, -1, Rational(1, 2));
    Wall wall = numerical_wall(v, w, zero, s1);
    REQUIRE(wall.kind == WallKind::semicircle);
    CHECK(wall.center == Rational(-3, 2));
    CHECK(wall.radius_sq == Rational(1, 4));
    check_three_points(wall, v, zero, s1);
}

TEST_CASE("loci with no positive-alpha points come back empty") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    CHECK(numerical_wall(kc(s1, 1, 0, Rational(-1)), kc(s1, 0, 1, Rational(1)), zero, s1).kind ==
          WallKind::empty);
    CHECK(numerical_wall(kc(s1, 1, 0, Rational(0)), kc(s1, 0, 1, Rational(0)), zero, s1).kind ==
          WallKind::empty);
}

TEST_CASE("wall membership certification") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 2, 0, Rational(-1));
    KClass w = k_unit(s1);
    Wall vertical = numerical_wall(v, w, zero, s1);
    CHECK(wall_contains(vertical, Rational(1), Rational(0), v, w, zero, s1));
    CHECK_FALSE(wall_contains(vertical, Rational(1), Rational(1, 3), v, w, zero, s1));
    CHECK_THROWS_AS(wall_contains(vertical, Rational(0), Rational(0), v, w, zero, s1),
                    std::invalid_argument);

    KClass v2 = kc(s1, 1, 0, Rational(-1));
    KClass w2 = kc(s1, 1, -1, Rational(1, 2));
    Wall circle = numerical_wall(v2, w2, zero, s1);
    // (beta - c)^2 + alpha^2 = 9/100 + 16/100 = 1/4 = rho
    Rational beta = Rational(-3, 2) + Rational(3, 10);
    CHECK(wall_contains(circle, Rational(2, 5), beta, v2, w2, zero, s1));
    CHECK_FALSE(wall_contains(circle, Rational(1, 2), beta, v2, w2, zero, s1));

    // Handing the wall of one pair to a different pair must be caught.
    CHECK_THROWS_AS(wall_contains(circle, Rational(2, 5), beta, v, w, zero, s1),
                    std::logic_error);
}

TEST_CASE("wall locus is stable under witness shifts by v") {
    std::mt19937_64 rng(32);
    for (const SurfaceData& s : {surface_s1(), surface_s2()}) {
        DivisorClass zero = DivisorClass::zero(s.rank);
        int interesting = 0;
        for (int i = 0; i < 600 && interesting < 40; ++i) {
            KClass v = random_integral_class(rng, s);
            KClass w = random_integral_class(rng, s);
            Wall base = numerical_wall(v, w, zero, s);
            if (base.kind != WallKind::semicircle && base.kind != WallKind::vertical) continue;
            ++interesting;
            Rational lambda = random_rational(rng, -3, 3);
            Wall shifted = numerical_wall(v, w + lambda * v, zero, s);
            if (shifted.kind == WallKind::everywhere) continue;  // w = -lambda v case
            REQUIRE(shifted.kind == base.kind);
            if (base.kind == WallKind::vertical) {
                CHECK(shifted.beta == base.beta);
            } else {
                CHECK(shifted.center == base.center);
                CHECK(shifted.radius_sq == base.radius_sq);
            }
        }
        CHECK(interesting >= 40);
    }
}

TEST_CASE("region intersection predicate") {
    Wall vertical;
    vertical.kind = WallKind::vertical;
    vertical.beta = Rational(1, 2);
    CHECK(wall_meets_region(vertical, {Rational(0), Rational(1), Rational(3)}));
    CHECK_FALSE(wall_meets_region(vertical, {Rational(1), Rational(2), Rational(3)}));
    CHECK_FALSE(wall_meets_region(vertical, {Rational(0), Rational(1), Rational(0)}));

    Wall circle;
    circle.kind = WallKind::semicircle;
    circle.center = Rational(0);
    circle.radius_sq = Rational(4);  // feet at -2 and 2
    CHECK(wall_meets_region(circle, {Rational(-3), Rational(3), Rational(1)}));
    CHECK(wall_meets_region(circle, {Rational(1), Rational(5), Rational(1)}));
    CHECK_FALSE(wall_meets_region(circle, {Rational(3), Rational(5), Rational(10)}));
    CHECK_FALSE(wall_meets_region(circle, {Rational(-5), Rational(-3), Rational(10)}));
    // Window strictly inside the feet: the top of the circle over [-1,1]
    // has alpha^2 between 3 and 4.
    CHECK(wall_meets_region(circle, {Rational(-1), Rational(1), Rational(2)}));
    CHECK_FALSE(wall_meets_region(circle, {Rational(-1), Rational(1), Rational(3, 2)}));

    Wall everywhere;
    everywhere.kind = WallKind::everywhere;
    CHECK(wall_meets_region(everywhere, {Rational(0), Rational(1), Rational(1)}));
    Wall empty;
    empty.kind = WallKind::empty;
    CHECK_FALSE(wall_meets_region(empty, {Rational(-9), Rational(9), Rational(9)}));
}

TEST_CASE("enumeration finds the pinned wall and stays deterministic") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    WallRegion region{Rational(-3), Rational(1), Rational(3)};
    WallSearchBounds bounds{2, 4};
    std::vector<Wall> walls = enumerate_candidate_walls(v, zero, s1, region, bounds);
    REQUIRE_FALSE(walls.empty());

    bool found = false;
    for (const Wall& w : walls) {
        if (w.kind == WallKind::semicircle && w.center == Rational(-3, 2) &&
            w.radius_sq == Rational(1, 4))
            found = true;
    }
    CHECK(found);

    for (const Wall& w : walls) check_three_points(w, v, zero, s1);

    std::vector<Wall> again = enumerate_candidate_walls(v, zero, s1, region, bounds);
    REQUIRE(again.size() == walls.size());
    for (std::size_t i = 0; i < walls.size(); ++i) {
        CHECK(walls[i].kind == again[i].kind);
        CHECK(walls[i].witness == again[i].witness);
    }
}

TEST_CASE("enumerated loci are pairwise distinct") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    std::vector<Wall> walls = enumerate_candidate_walls(
        v, zero, s1, {Rational(-3), Rational(1), Rational(3)}, {2, 4});
    for (std::size_t i = 0; i < walls.size(); ++i) {
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            bool same = walls[i].kind == walls[j].kind && walls[i].beta == walls[j].beta &&
                        walls[i].center == walls[j].center &&
                        walls[i].radius_sq == walls[j].radius_sq;
            CHECK_FALSE(same);
        }
    }
}

TEST_CASE("growing the search bounds never drops walls") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    WallRegion region{Rational(-3), Rational(1), Rational(3)};
    std::vector<Wall> small = enumerate_candidate_walls(v, zero, s1, region, {2, 4});
    std::vector<Wall> large = enumerate_candidate_walls(v, zero, s1, region, {4, 8});
    for (const Wall& w : small) {
        bool present = std::any_of(large.begin(), large.end(), [&](const Wall& x) {
            return x.kind == w.kind && x.beta == w.beta && x.center == w.center &&
                   x.radius_sq == w.radius_sq;
        });
        CHECK(present);
    }
}

TEST_CASE("enumeration argument validation") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    WallRegion region{Rational(-3), Rational(1), Rational(3)};
    CHECK_THROWS_AS(enumerate_candidate_walls(v, zero, s1, region, {0, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_candidate_walls(v, zero, s1, region, {2, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_candidate_walls(v, zero, s1,
                                              {Rational(2), Rational(1), Rational(3)}, {2, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        enumerate_candidate_walls(kc(s1, 0, 1, Rational(0)), zero, s1, region, {2, 4}),
        std::invalid_argument);
    CHECK(enumerate_candidate_walls(v, zero, s1, {Rational(-3), Rational(1), Rational(0)},
                                    {2, 4})
              .empty());
    // Negative support form: no semistable class, no walls.
    CHECK(enumerate_candidate_walls(kc(s1, 1, 0, Rational(1)), zero, s1, region, {2, 4})
              .empty());
}

TEST_CASE("nestedness holds for enumerated families") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));
    std::vector<Wall> walls = enumerate_candidate_walls(
        v, zero, s1, {Rational(-3), Rational(1), Rational(3)}, {2, 4});
    CHECK(check_nested(walls, v, zero, s1).empty());

    SurfaceData s2 = surface_s2();
    DivisorClass zero2 = DivisorClass::zero(2);
    KClass v2 = kc(s2, 2, 0, Rational(-1));
    std::vector<Wall> walls2 = enumerate_candidate_walls(
        v2, zero2, s2, {Rational(-3), Rational(3), Rational(3)}, {2, 3});
    CHECK(check_nested(walls2, v2, zero2, s2).empty());
}

TEST_CASE("hand-built crossing circles are reported") {
    SurfaceData s1 = surface_s1();
    DivisorClass zero = DivisorClass::zero(1);
    KClass v = kc(s1, 1, 0, Rational(-1));  // vertical wall at beta = 0
    Wall a;
    a.kind = WallKind::semicircle;
    a.center = Rational(0);
    a.radius_sq = Rational(4);
    Wall b = a;
    b.center = Rational(1);
    auto crossings = check_nested({a, b}, v, zero, s1);
    REQUIRE(crossings.size() == 1);
    CHECK(crossings[0] == std::pair<std::size_t, std::size_t>{0, 1});

    CHECK(check_nested({a}, v, zero, s1).empty());

    // Opposite sides of the vertical wall: out of scope for nesting.
    Wall left = a;
    left.center = Rational(-2);
    left.radius_sq = Rational(1);
    Wall right = a;
    right.center = Rational(2);
    right.radius_sq = Rational(1);
    CHECK(check_nested({left, right}, v, zero, s1).empty());

    // Concentric circles never cross.
    Wall inner = a;
    inner.radius_sq = Rational(1);
    CHECK(check_nested({a, inner}, v, zero, s1).empty());
}
