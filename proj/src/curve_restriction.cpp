#include "tiltlab/curve_restriction.hpp"

#include <stdexcept>

#include "tiltlab/vertical.hpp"

namespace tiltlab {

bool operator==(const CurveKClass& a, const CurveKClass& b) {
    return a.rank == b.rank && a.degree == b.degree;
}

Integer curve_genus(const Integer& a, const SurfaceData& s) {
    if (a < 1) throw std::domain_error("curve_genus requires a >= 1");
    DivisorClass aH = Rational(a) * s.H;
    Rational g = 1 + intersect(aH, aH + s.K, s) / 2;
    if (!is_integer(g))
        throw std::domain_error("fractional genus: surface data violates parity");
    if (g < 0)
        throw std::domain_error("negative genus: numerically inconsistent surface data");
    return g.get_num();
}

CurveContext make_curve_context(const Integer& a, const SurfaceData& s) {
    Integer genus = curve_genus(a, s);
    Rational hdeg = Rational(a) * degree(s);
    return {a, std::move(genus), hdeg.get_num()};
}

CurveKClass restrict_class(const KClass& x, const Integer& a, const SurfaceData& s) {
    if (a < 1) throw std::domain_error("restrict_class requires a >= 1");
    return {x.ch0, intersect(x.ch1, Rational(a) * s.H, s)};
}

Integer flenner_min_degree(const Integer& r, const SurfaceData& s) {
    if (r < 1) throw std::domain_error("flenner_min_degree requires r >= 1");
    Rational quarter = (Rational(r) * Rational(r) - 1) / 4;
    Rational bound = degree(s) * (quarter > 1 ? quarter : Rational(1));
    // least integer a with (a+1)/2 > bound, i.e. a > 2.bound - 1
    return floor_rational(2 * bound - 1) + 1;
}

Rational curve_chi(const CurveKClass& E, const CurveKClass& F, const Integer& g) {
    return E.rank * F.degree + (E.degree + E.rank * (1 - Rational(g))) * F.rank;
}

std::optional<Integer> seshadri_degree(const CurveKClass& F, const Integer& r,
                                       const Integer& g) {
    if (F.rank <= 0) throw std::domain_error("seshadri_degree requires positive rank");
    if (r < 1) throw std::domain_error("seshadri_degree requires r >= 1");
    // Solve r.deg F + (d + r.(1-g)).rk F = 0 for d.
    Rational d = Rational(r) * (Rational(g) - 1) - Rational(r) * F.degree / F.rank;
    if (!is_integer(d)) return std::nullopt;
    return d.get_num();
}

std::optional<std::pair<Integer, Integer>> seshadri_first_rank(const CurveKClass& F,
                                                               const Integer& r0,
                                                               const Integer& g) {
    if (r0 < 1) throw std::domain_error("seshadri_first_rank requires r0 >= 1");
    for (Integer r = r0; r <= r0 + 10000; ++r) {
        auto d = seshadri_degree(F, r, g);
        if (d) return std::make_pair(r, *d);
    }
    return std::nullopt;
}

CurveKClass complement_class(const KClass& v, const Integer& a, const Integer& m,
                             const SurfaceData& s) {
    if (v.ch0 <= 0) throw std::domain_error("complement_class requires positive rank");
    if (a < 1 || m < 1) throw std::domain_error("complement_class requires a, m >= 1");
    CurveKClass w_restricted = restrict_class(w_class(v, a, s), a, s);
    Rational mm(m);
    return {-mm * w_restricted.rank, -mm * w_restricted.degree};
}

}  // namespace tiltlab
