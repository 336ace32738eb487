#pragma once

#include <map>
#include <string>
#include <vector>

#include "tiltlab/kclass.hpp"

namespace tiltlab {

enum class FactorKind { bundle, skyscraper };

// Stable factor of a polystable object on the vertical wall: either a
// slope-stable bundle (tracked by an opaque isomorphism token plus its
// class) or a shifted skyscraper at a named point.
struct StableFactor {
    FactorKind kind = FactorKind::skyscraper;
    std::string iso_id;   // bundle only
    KClass cls;           // bundle only
    std::string point_id;  // skyscraper only

    static StableFactor make_bundle(std::string iso_id, KClass cls);
    static StableFactor make_skyscraper(std::string point_id);
};

// Direct sum of stable factors, as a multiset.
struct PolystableObject {
    std::vector<StableFactor> factors;
};

// Symbolic stand-in for a slope-polystable torsion-free sheaf: the bundle
// factors of its double dual plus the length of the torsion quotient at each
// supporting point.
struct MockSheaf {
    std::vector<StableFactor> double_dual;          // bundle factors only
    std::map<std::string, Integer> torsion_lengths;  // strictly positive
};

// The polystable object attached to a mock sheaf: its double-dual factors
// plus one shifted skyscraper per unit of torsion length at each point.
// Throws std::invalid_argument when the mock violates its invariants.
PolystableObject sigma_graded(const MockSheaf& mock);

// Multiset equality of factors; bundles compare by iso token, skyscrapers by
// point name.
bool s_equivalent(const PolystableObject& x, const PolystableObject& y);

// Double-dual multisets match by iso token and the torsion length maps are
// equal point-for-point.
bool uhlenbeck_equivalent(const MockSheaf& m1, const MockSheaf& m2);

// Sum of factor classes; a shifted skyscraper contributes (0, 0, -1).
KClass total_class(const PolystableObject& x, const SurfaceData& s);

// Checks that x decomposes v on its vertical wall: total class equals v and
// every bundle factor has positive rank, twisted slope equal to the wall
// location of v, and nonnegative support form. Returns one message per
// violation; empty means valid.
std::vector<std::string> validate_polystable(const PolystableObject& x, const KClass& v,
                                             const DivisorClass& B, const SurfaceData& s);

// Produces a mock sheaf whose sigma_graded is S-equivalent to x, witnessing
// surjectivity of the point-level correspondence. Throws
// std::invalid_argument when x contains a malformed factor.
MockSheaf mock_from_polystable(const PolystableObject& x);

}  // namespace tiltlab
