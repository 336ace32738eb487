#pragma once

#include "tiltlab/kclass.hpp"
#include "tiltlab/rational.hpp"
#include "tiltlab/surface_lattice.hpp"

namespace tiltlab {

// Point (alpha, beta) of the stability half-plane together with the twist
// divisor B. alpha must be positive; the constructor enforces it.
struct StabilityParams {
    Rational alpha;
    Rational beta;
    DivisorClass B;

    StabilityParams(Rational a, Rational b, DivisorClass twist);
};

struct CentralChargeValue {
    Rational re;
    Rational im;
};

// A slope value on the extended line: finite rational or +infinity.
struct SlopeValue {
    bool infinite = false;
    Rational value;

    static SlopeValue finite(Rational v) { return {false, std::move(v)}; }
    static SlopeValue plus_infinity() { return {true, Rational(0)}; }
    bool is_finite() const { return !infinite; }
};

bool operator==(const SlopeValue& a, const SlopeValue& b);

// Twisted slope H.ch1_B / (H.H.ch0); +infinity on rank-0 classes.
SlopeValue mu_B(const KClass& a, const DivisorClass& B, const SurfaceData& s);

// Central charge at (alpha, beta, B):
//   re = ((alpha^2 - beta^2)/2).H.H.ch0_B + beta.H.ch1_B - ch2_B
//   im = alpha.(H.ch1_B - beta.H.H.ch0_B)
CentralChargeValue central_charge(const KClass& a, const StabilityParams& p, const SurfaceData& s);

// -re/im when im != 0; +infinity when im = 0.
SlopeValue tilt_slope(const KClass& a, const StabilityParams& p, const SurfaceData& s);

// Location beta0 = H.ch1_B(v) / (H.H.ch0(v)) of the vertical wall of v.
// Throws std::domain_error unless v.ch0 > 0.
Rational vertical_beta(const KClass& v, const DivisorClass& B, const SurfaceData& s);

// Support form (H.ch1)^2 - 2.H.H.ch0.ch2, nonnegative on semistable classes.
Rational discriminant(const KClass& a, const SurfaceData& s);

enum class LocusSign { negative, zero, positive };

// Sign of Im Z(a) at p; "zero" marks classes sitting on their vertical locus.
LocusSign vertical_locus_kind(const KClass& a, const StabilityParams& p, const SurfaceData& s);

}  // namespace tiltlab
