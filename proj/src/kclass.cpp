#include "tiltlab/kclass.hpp"

namespace tiltlab {

KClass operator+(const KClass& a, const KClass& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

KClass operator-(const KClass& a, const KClass& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2};
}

KClass operator-(const KClass& a) { return {-a.ch0, -a.ch1, -a.ch2}; }

KClass operator*(const Rational& c, const KClass& a) {
    return {c * a.ch0, c * a.ch1, c * a.ch2};
}

bool operator==(const KClass& a, const KClass& b) {
    return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
}

ToddClass todd_class(const SurfaceData& s) {
    return {Rational(1), Rational(-1, 2) * s.K, Rational(s.chiO)};
}

KClass k_unit(const SurfaceData& s) {
    return {Rational(1), DivisorClass::zero(s.rank), Rational(0)};
}

KClass point_class(const SurfaceData& s) {
    return {Rational(0), DivisorClass::zero(s.rank), Rational(1)};
}

KClass hyperplane_section_class(const SurfaceData& s) {
    return {Rational(0), s.H, Rational(-1, 2) * degree(s)};
}

KClass line_bundle_class(const Integer& n, const SurfaceData& s) {
    Rational rn(n);
    return {Rational(1), rn * s.H, rn * rn * degree(s) / 2};
}

KClass curve_class(const Integer& a, const SurfaceData& s) {
    Rational ra(a);
    return {Rational(0), ra * s.H, -ra * ra * degree(s) / 2};
}

KClass k_mul(const KClass& a, const KClass& b, const SurfaceData& s) {
    Rational ch0 = a.ch0 * b.ch0;
    DivisorClass ch1 = a.ch0 * b.ch1 + b.ch0 * a.ch1;
    Rational ch2 = a.ch0 * b.ch2 + b.ch0 * a.ch2 + intersect(a.ch1, b.ch1, s);
    return {std::move(ch0), std::move(ch1), std::move(ch2)};
}

KClass twist_B(const KClass& a, const DivisorClass& B, const SurfaceData& s) {
    Rational bb = intersect(B, B, s);
    Rational ch2 = a.ch2 - intersect(B, a.ch1, s) + bb / 2 * a.ch0;
    return {a.ch0, a.ch1 - a.ch0 * B, std::move(ch2)};
}

KClass tensor_line(const KClass& a, const Integer& n, const SurfaceData& s) {
    return k_mul(a, line_bundle_class(n, s), s);
}

Rational euler_pairing(const KClass& a, const KClass& b, const SurfaceData& s) {
    KClass p = k_mul(a, b, s);
    ToddClass td = todd_class(s);
    return p.ch2 + intersect(p.ch1, td.t1, s) + p.ch0 * td.t2;
}

bool is_integral_class(const KClass& a, const SurfaceData& s) {
    if (!is_integer(a.ch0) || !a.ch1.is_integral()) return false;
    Rational c2 = intersect(a.ch1, a.ch1, s) / 2 - a.ch2;
    return is_integer(c2);
}

}  // namespace tiltlab
