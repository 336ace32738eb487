#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tiltlab/kclass.hpp"
#include "tiltlab/tilt.hpp"

namespace tiltlab {

enum class WallKind { vertical, semicircle, everywhere, empty };

// Locus in the (alpha, beta) half-plane where v and the witness class have
// equal tilt slope. Field use by kind: beta for vertical walls, center and
// radius_sq for semicircles; the other fields stay zero.
struct Wall {
    WallKind kind = WallKind::empty;
    Rational beta;
    Rational center;
    Rational radius_sq;
    KClass witness;
};

// Coefficients of the slope-equality locus of (v, w):
//   A.(alpha^2 + beta^2) + Bcoef.beta + C = 0, alpha > 0.
struct WallEquation {
    Rational A;
    Rational Bcoef;
    Rational C;
};

WallEquation wall_equation(const KClass& v, const KClass& w, const DivisorClass& B,
                           const SurfaceData& s);

// Re Z(v).Im Z(w) - Re Z(w).Im Z(v) at p, evaluated directly from the two
// central charges. Vanishes exactly on the wall of (v, w).
Rational nu_cross(const KClass& v, const KClass& w, const StabilityParams& p,
                  const SurfaceData& s);

// The same cross product divided by alpha, as a polynomial in (alpha^2, beta).
// Lets callers certify wall membership at points whose alpha is known only
// through its square.
Rational nu_cross_alpha_sq(const KClass& v, const KClass& w, const DivisorClass& B,
                           const SurfaceData& s, const Rational& alpha_sq,
                           const Rational& beta);

// Classifies the slope-equality locus of (v, w): a vertical line, a
// semicircle centered on the beta-axis, the whole half-plane (w numerically
// proportional to v), or empty.
Wall numerical_wall(const KClass& v, const KClass& w, const DivisorClass& B,
                    const SurfaceData& s);

// Exact membership test for (alpha, beta) on the wall, re-verified against
// the slope-equality cross product computed from scratch; throws
// std::invalid_argument on alpha <= 0 and std::logic_error if the two
// answers disagree (the wall does not belong to this (v, w, B)).
bool wall_contains(const Wall& wall, const Rational& alpha, const Rational& beta,
                   const KClass& v, const KClass& w, const DivisorClass& B,
                   const SurfaceData& s);

struct WallRegion {
    Rational beta_min;
    Rational beta_max;
    Rational alpha_max;
};

struct WallSearchBounds {
    long max_rank = 0;
    long max_c = 0;
};

// True iff the wall locus meets [beta_min, beta_max] x (0, alpha_max].
bool wall_meets_region(const Wall& wall, const WallRegion& region);

// Enumerates the walls of v cut out by integral witness classes w within the
// search bounds (|ch0| <= max_rank, |H.ch1_B| <= max_c and ch1 coords boxed
// by max_c, ch2 pruned by the support form: discriminant(w) >= 0,
// discriminant(v-w) >= 0 and their sum <= discriminant(v)), restricted to
// walls meeting the region. Deduplicated by locus keeping the
// lexicographically smallest witness; sorted by (kind, position, radius).
std::vector<Wall> enumerate_candidate_walls(const KClass& v, const DivisorClass& B,
                                            const SurfaceData& s, const WallRegion& region,
                                            const WallSearchBounds& bounds);

// Exact pairwise intersection check for semicircles on a common side of the
// vertical wall of v. Returns the (input-index) pairs whose loci cross at
// some alpha > 0; empty means properly nested.
std::vector<std::pair<std::size_t, std::size_t>> check_nested(const std::vector<Wall>& walls,
                                                              const KClass& v,
                                                              const DivisorClass& B,
                                                              const SurfaceData& s);

}  // namespace tiltlab
