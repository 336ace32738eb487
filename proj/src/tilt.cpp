#include "tiltlab/tilt.hpp"

#include <stdexcept>

namespace tiltlab {

StabilityParams::StabilityParams(Rational a, Rational b, DivisorClass twist)
    : alpha(std::move(a)), beta(std::move(b)), B(std::move(twist)) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
}

bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
}

SlopeValue mu_B(const KClass& a, const DivisorClass& B, const SurfaceData& s) {
    if (a.ch0 == 0) return SlopeValue::plus_infinity();
    KClass t = twist_B(a, B, s);
    return SlopeValue::finite(intersect(s.H, t.ch1, s) / (degree(s) * t.ch0));
}

CentralChargeValue central_charge(const KClass& a, const StabilityParams& p,
                                  const SurfaceData& s) {
    KClass t = twist_B(a, p.B, s);
    Rational g = degree(s);
    Rational hch1 = intersect(s.H, t.ch1, s);
    Rational re = (p.alpha * p.alpha - p.beta * p.beta) / 2 * g * t.ch0 + p.beta * hch1 - t.ch2;
    Rational im = p.alpha * (hch1 - p.beta * g * t.ch0);
    return {std::move(re), std::move(im)};
}

SlopeValue tilt_slope(const KClass& a, const StabilityParams& p, const SurfaceData& s) {
    CentralChargeValue z = central_charge(a, p, s);
    if (z.im == 0) return SlopeValue::plus_infinity();
    return SlopeValue::finite(-z.re / z.im);
}

Rational vertical_beta(const KClass& v, const DivisorClass& B, const SurfaceData& s) {
    if (v.ch0 <= 0) throw std::domain_error("vertical_beta requires positive rank");
    KClass t = twist_B(v, B, s);
    return intersect(s.H, t.ch1, s) / (degree(s) * t.ch0);
}

Rational discriminant(const KClass& a, const SurfaceData& s) {
    Rational hch1 = intersect(s.H, a.ch1, s);
    return hch1 * hch1 - 2 * degree(s) * a.ch0 * a.ch2;
}

LocusSign vertical_locus_kind(const KClass& a, const StabilityParams& p, const SurfaceData& s) {
    CentralChargeValue z = central_charge(a, p, s);
    if (z.im == 0) return LocusSign::zero;
    return z.im > 0 ? LocusSign::positive : LocusSign::negative;
}

}  // namespace tiltlab
