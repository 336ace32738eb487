#pragma once

#include <optional>
#include <utility>

#include "tiltlab/kclass.hpp"

namespace tiltlab {

// Class in the K theory of a smooth curve, identified by rank and degree.
struct CurveKClass {
    Rational rank;
    Rational degree;
};

bool operator==(const CurveKClass& a, const CurveKClass& b);

// Data of a general member C of the linear system |aH|.
struct CurveContext {
    Integer a;
    Integer genus;
    Integer hdeg;  // degree of h restricted to C, = a.H.H
};

// Genus by adjunction: g = 1 + aH.(aH + K)/2. Throws std::domain_error when
// a < 1 or the result is negative or fractional (inconsistent surface data).
Integer curve_genus(const Integer& a, const SurfaceData& s);

CurveContext make_curve_context(const Integer& a, const SurfaceData& s);

// Restriction K(X) -> K(C): (ch0, ch1, ch2) -> (ch0, ch1.aH). Total by
// construction; consistency with the surface-side pairing against [O_C] is a
// tested contract.
CurveKClass restrict_class(const KClass& x, const Integer& a, const SurfaceData& s);

// Least a with (a+1)/2 > deg X . max{(r^2-1)/4, 1}; restriction to a general
// member of |aH| then preserves slope semistability of rank-r classes.
Integer flenner_min_degree(const Integer& r, const SurfaceData& s);

// chi(C, E (x) F) = rk E.deg F + (deg E + rk E.(1-g)).rk F.
Rational curve_chi(const CurveKClass& E, const CurveKClass& F, const Integer& g);

// The unique degree d with curve_chi((r,d), F, g) = 0, when integral;
// nullopt signals that this r admits no integral solution.
std::optional<Integer> seshadri_degree(const CurveKClass& F, const Integer& r,
                                       const Integer& g);

// Least r >= r0 admitting an integral seshadri_degree, searched up to
// r0 + 10000; pairs it with that degree.
std::optional<std::pair<Integer, Integer>> seshadri_first_rank(const CurveKClass& F,
                                                               const Integer& r0,
                                                               const Integer& g);

// Rank and degree of -m.(w|_C) where w is the curve-power class of (v, a);
// rank = m.a.ch0(v).deg X and chi(v|_C . result) = 0 exactly.
CurveKClass complement_class(const KClass& v, const Integer& a, const Integer& m,
                             const SurfaceData& s);

}  // namespace tiltlab
