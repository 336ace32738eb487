#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tiltlab/rational.hpp"

namespace tiltlab {

// Divisor class written in a fixed integral basis of the numerical
// Neron-Severi lattice of the surface.
struct DivisorClass {
    std::vector<Rational> coords;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> c) : coords(std::move(c)) {}

    static DivisorClass zero(std::size_t rank) {
        return DivisorClass(std::vector<Rational>(rank, Rational(0)));
    }

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const;
    bool is_integral() const;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rational& c, const DivisorClass& a);
bool operator==(const DivisorClass& a, const DivisorClass& b);

// Numerical data of a smooth projective polarized surface: intersection
// form on the lattice basis, polarization H, canonical class K, chi(O).
struct SurfaceData {
    int rank = 0;
    std::vector<std::vector<Integer>> gram;
    DivisorClass H;
    DivisorClass K;
    Integer chiO = 0;
};

// Intersection pairing d1.gram.d2. Throws std::invalid_argument when either
// class has the wrong number of coordinates for s.
Rational intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceData& s);

// deg X = H.H
Rational degree(const SurfaceData& s);

// Checks the structural constraints on s: positive rank, square symmetric
// gram, integral H and K of matching dimension, H.H > 0, and D.D + D.K even
// for every basis divisor D. Returns one message per violation; empty means
// the data is consistent.
std::vector<std::string> validate_surface(const SurfaceData& s);

// Fixture: Picard rank 1, gram [1], H=(1), K=(-3), chi(O)=1.
SurfaceData surface_s1();
// Fixture: Picard rank 2, gram [[0,1],[1,0]], H=(1,1), K=(-2,-2), chi(O)=1.
SurfaceData surface_s2();

}  // namespace tiltlab
