#pragma once

#include <vector>

#include "tiltlab/kclass.hpp"
#include "tiltlab/tilt.hpp"

namespace tiltlab {

// Rank-0 class u = -chi(v.h^2).h + chi(v.h).h^2 attached to a positive-rank
// class v. Pairing against u recovers, up to a positive scalar, the
// imaginary part of the normalized central charge on the vertical wall.
// Throws std::domain_error unless v.ch0 > 0.
KClass u_class(const KClass& v, const SurfaceData& s);

// Closed form for chi(a.u): deg X . (ch0_B(a).H.ch1_B(v) - ch0_B(v).H.ch1_B(a)).
// Independent of B; agreement with euler_pairing(a, u_class(v)) is a tested
// contract, not an assumption.
Rational chi_with_u(const KClass& a, const KClass& v, const DivisorClass& B,
                    const SurfaceData& s);

// Value of the shifted charge -Z_{alpha, beta0(v)}(v): a negative real
// number. Throws std::domain_error when v has nonpositive rank or when the
// value fails to be negative (the support form of v is negative on the wall).
Rational wall_charge(const KClass& v, const Rational& alpha, const DivisorClass& B,
                     const SurfaceData& s);

// Scalar -alpha / (ch0(v) . wall_charge . deg X) > 0 relating u to the
// nef-class pairing at the given alpha.
Rational wz_multiplier(const KClass& v, const Rational& alpha, const DivisorClass& B,
                       const SurfaceData& s);

// Im(-Z(a)/Z(v)) at (alpha, beta0(v)) in the shifted convention, computed
// purely from central charges.
Rational im_ratio(const KClass& a, const KClass& v, const Rational& alpha,
                  const DivisorClass& B, const SurfaceData& s);

// Checks im_ratio(a) == wz_multiplier . chi_with_u(a) exactly, the two sides
// computed by independent routes (charge arithmetic vs. the closed formula).
bool proportionality_check(const KClass& a, const KClass& v, const Rational& alpha,
                           const DivisorClass& B, const SurfaceData& s);

// w = -chi(v.h.[O_C]).1 + chi(v.[O_C]).h for C in |aH|; all chi values by
// the full Euler pairing. Throws std::domain_error unless v.ch0 > 0, a >= 1.
KClass w_class(const KClass& v, const Integer& a, const SurfaceData& s);

// True iff w - w(-a) = a^2.u as exact Chern triples.
bool curve_power_identity(const KClass& v, const Integer& a, const SurfaceData& s);

// Stabilizer weights chi(factor.u) per factor class; all zero certifies
// descent of the induced line bundle datum.
std::vector<Rational> descent_weights(const std::vector<KClass>& factors, const KClass& v,
                                      const DivisorClass& B, const SurfaceData& s);

// Bundled data of the vertical wall of (v, B): wall location, the class u,
// and the alpha-dependent charge and multiplier maps.
struct VerticalWallData {
    KClass v;
    DivisorClass B;
    Rational beta0;
    KClass u;
    SurfaceData surface;

    Rational Zv_at(const Rational& alpha) const;          // always < 0
    Rational multiplier_at(const Rational& alpha) const;  // always > 0
};

// Validates that the wall charge stays negative for every alpha > 0 (throws
// std::domain_error otherwise) and assembles the wall data.
VerticalWallData make_vertical_wall_data(const KClass& v, const DivisorClass& B,
                                         const SurfaceData& s);

}  // namespace tiltlab
