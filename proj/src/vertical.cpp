#include "tiltlab/vertical.hpp"

#include <stdexcept>

namespace tiltlab {

KClass u_class(const KClass& v, const SurfaceData& s) {
    if (v.ch0 <= 0) throw std::domain_error("u_class requires positive rank");
    KClass h = hyperplane_section_class(s);
    KClass h2 = k_mul(h, h, s);
    Rational c_h2 = euler_pairing(v, h2, s);
    Rational c_h = euler_pairing(v, h, s);
    return (-c_h2) * h + c_h * h2;
}

Rational chi_with_u(const KClass& a, const KClass& v, const DivisorClass& B,
                    const SurfaceData& s) {
    if (v.ch0 <= 0) throw std::domain_error("chi_with_u requires positive rank");
    KClass ta = twist_B(a, B, s);
    KClass tv = twist_B(v, B, s);
    Rational cross = ta.ch0 * intersect(s.H, tv.ch1, s) - tv.ch0 * intersect(s.H, ta.ch1, s);
    return degree(s) * cross;
}

Rational wall_charge(const KClass& v, const Rational& alpha, const DivisorClass& B,
                     const SurfaceData& s) {
    if (alpha <= 0) throw std::invalid_argument("wall_charge requires alpha > 0");
    Rational beta0 = vertical_beta(v, B, s);
    CentralChargeValue z = central_charge(v, StabilityParams(alpha, beta0, B), s);
    Rational value = -z.re;
    if (value >= 0)
        throw std::domain_error("charge of v on its vertical wall is not negative");
    return value;
}

Rational wz_multiplier(const KClass& v, const Rational& alpha, const DivisorClass& B,
                       const SurfaceData& s) {
    Rational zv = wall_charge(v, alpha, B, s);
    return -alpha / (v.ch0 * zv * degree(s));
}

Rational im_ratio(const KClass& a, const KClass& v, const Rational& alpha,
                  const DivisorClass& B, const SurfaceData& s) {
    Rational zv = wall_charge(v, alpha, B, s);
    Rational beta0 = vertical_beta(v, B, s);
    CentralChargeValue za = central_charge(a, StabilityParams(alpha, beta0, B), s);
    return za.im / zv;
}

bool proportionality_check(const KClass& a, const KClass& v, const Rational& alpha,
                           const DivisorClass& B, const SurfaceData& s) {
    Rational lhs = im_ratio(a, v, alpha, B, s);
    Rational rhs = wz_multiplier(v, alpha, B, s) * chi_with_u(a, v, B, s);
    return lhs == rhs;
}

KClass w_class(const KClass& v, const Integer& a, const SurfaceData& s) {
    if (v.ch0 <= 0) throw std::domain_error("w_class requires positive rank");
    if (a < 1) throw std::domain_error("w_class requires a >= 1");
    KClass h = hyperplane_section_class(s);
    KClass oc = curve_class(a, s);
    Rational c_hoc = euler_pairing(v, k_mul(h, oc, s), s);
    Rational c_oc = euler_pairing(v, oc, s);
    return (-c_hoc) * k_unit(s) + c_oc * h;
}

bool curve_power_identity(const KClass& v, const Integer& a, const SurfaceData& s) {
    KClass w = w_class(v, a, s);
    KClass lhs = w - tensor_line(w, -a, s);
    KClass rhs = Rational(a * a) * u_class(v, s);
    return lhs == rhs;
}

std::vector<Rational> descent_weights(const std::vector<KClass>& factors, const KClass& v,
                                      const DivisorClass&, const SurfaceData& s) {
    // u is untwisted and chi(f.u) does not depend on the twist, so the
    // divisor argument only fixes which wall the factors are judged against.
    KClass u = u_class(v, s);
    std::vector<Rational> weights;
    weights.reserve(factors.size());
    for (const KClass& f : factors) weights.push_back(euler_pairing(f, u, s));
    return weights;
}

Rational VerticalWallData::Zv_at(const Rational& alpha) const {
    return wall_charge(v, alpha, B, surface);
}

Rational VerticalWallData::multiplier_at(const Rational& alpha) const {
    return wz_multiplier(v, alpha, B, surface);
}

VerticalWallData make_vertical_wall_data(const KClass& v, const DivisorClass& B,
                                         const SurfaceData& s) {
    VerticalWallData data{v, B, vertical_beta(v, B, s), u_class(v, s), s};
    // The wall charge is -(g.ch0(v)/2).alpha^2 - constant; it stays negative
    // for every alpha > 0 exactly when the constant part is nonpositive, so
    // checking the alpha -> 0 limit settles all alpha at once.
    KClass tv = twist_B(v, B, s);
    Rational limit = degree(s) * tv.ch0 / 2 * data.beta0 * data.beta0 - tv.ch2;
    if (limit < 0)
        throw std::domain_error("wall charge of v is not negative for small alpha");
    return data;
}

}  // namespace tiltlab
