#pragma once

#include "tiltlab/rational.hpp"
#include "tiltlab/surface_lattice.hpp"

namespace tiltlab {

// Numerical K-theory class on a surface, identified by its Chern character
// truncated at degree 2.
struct KClass {
    Rational ch0;
    DivisorClass ch1;
    Rational ch2;

    KClass() = default;
    KClass(Rational c0, DivisorClass c1, Rational c2)
        : ch0(std::move(c0)), ch1(std::move(c1)), ch2(std::move(c2)) {}
};

KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a, const KClass& b);
KClass operator-(const KClass& a);
KClass operator*(const Rational& c, const KClass& a);
bool operator==(const KClass& a, const KClass& b);

// Todd class of the surface: 1 - K/2 + chi(O).[p].
struct ToddClass {
    Rational t0;
    DivisorClass t1;
    Rational t2;
};

ToddClass todd_class(const SurfaceData& s);

// Named constructors.
KClass k_unit(const SurfaceData& s);                     // [O_X] = (1, 0, 0)
KClass point_class(const SurfaceData& s);                // [O_p] = (0, 0, 1)
KClass hyperplane_section_class(const SurfaceData& s);   // h = [O_H] = (0, H, -H.H/2)
KClass line_bundle_class(const Integer& n, const SurfaceData& s);  // [O_X(nH)]
KClass curve_class(const Integer& a, const SurfaceData& s);        // [O_C], C in |aH|

// Product in the numerical K ring via multiplicativity of ch, truncated at
// degree 2. Commutative and associative with unit k_unit.
KClass k_mul(const KClass& a, const KClass& b, const SurfaceData& s);

// B-twisted Chern character e^{-B}.ch: (ch0, ch1 - B.ch0, ch2 - B.ch1 + (B.B/2).ch0).
KClass twist_B(const KClass& a, const DivisorClass& B, const SurfaceData& s);

// Class of a (.) O_X(nH).
KClass tensor_line(const KClass& a, const Integer& n, const SurfaceData& s);

// chi(a.b): degree-2 part of ch(a).ch(b).td integrated over the surface.
Rational euler_pairing(const KClass& a, const KClass& b, const SurfaceData& s);

// True iff the triple is the Chern character of an honest integral class:
// ch0 and ch1 integral and ch1.ch1/2 - ch2 (the integral second Chern class)
// an integer.
bool is_integral_class(const KClass& a, const SurfaceData& s);

}  // namespace tiltlab
