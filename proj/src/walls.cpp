#include "tiltlab/walls.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace tiltlab {

namespace {

struct ChargeData {
    Rational r;  // ch0
    Rational d;  // H.ch1_B
    Rational e;  // ch2_B
};

ChargeData charge_data(const KClass& x, const DivisorClass& B, const SurfaceData& s) {
    KClass t = twist_B(x, B, s);
    return {t.ch0, intersect(s.H, t.ch1, s), t.ch2};
}

}  // namespace

WallEquation wall_equation(const KClass& v, const KClass& w, const DivisorClass& B,
                           const SurfaceData& s) {
    ChargeData cv = charge_data(v, B, s);
    ChargeData cw = charge_data(w, B, s);
    Rational g = degree(s);
    WallEquation eq;
    eq.A = g / 2 * (cv.r * cw.d - cw.r * cv.d);
    eq.Bcoef = g * (cv.e * cw.r - cw.e * cv.r);
    eq.C = cw.e * cv.d - cv.e * cw.d;
    return eq;
}

Rational nu_cross(const KClass& v, const KClass& w, const StabilityParams& p,
                  const SurfaceData& s) {
    CentralChargeValue zv = central_charge(v, p, s);
    CentralChargeValue zw = central_charge(w, p, s);
    return zv.re * zw.im - zw.re * zv.im;
}

Rational nu_cross_alpha_sq(const KClass& v, const KClass& w, const DivisorClass& B,
                           const SurfaceData& s, const Rational& alpha_sq,
                           const Rational& beta) {
    WallEquation eq = wall_equation(v, w, B, s);
    return eq.A * (alpha_sq + beta * beta) + eq.Bcoef * beta + eq.C;
}

Wall numerical_wall(const KClass& v, const KClass& w, const DivisorClass& B,
                    const SurfaceData& s) {
    WallEquation eq = wall_equation(v, w, B, s);
    Wall wall;
    wall.witness = w;
    if (eq.A == 0) {
        if (eq.Bcoef == 0) {
            wall.kind = eq.C == 0 ? WallKind::everywhere : WallKind::empty;
            return wall;
        }
        wall.kind = WallKind::vertical;
        wall.beta = -eq.C / eq.Bcoef;
        return wall;
    }
    Rational center = -eq.Bcoef / (2 * eq.A);
    Rational radius_sq = center * center - eq.C / eq.A;
    if (radius_sq <= 0) {
        wall.kind = WallKind::empty;
        return wall;
    }
    wall.kind = WallKind::semicircle;
    wall.center = std::move(center);
    wall.radius_sq = std::move(radius_sq);
    return wall;
}

bool wall_contains(const Wall& wall, const Rational& alpha, const Rational& beta,
                   const KClass& v, const KClass& w, const DivisorClass& B,
                   const SurfaceData& s) {
    if (alpha <= 0) throw std::invalid_argument("wall_contains requires alpha > 0");
    bool member = false;
    switch (wall.kind) {
        case WallKind::vertical:
            member = beta == wall.beta;
            break;
        case WallKind::semicircle: {
            Rational lhs = (beta - wall.center) * (beta - wall.center) + alpha * alpha;
            member = lhs == wall.radius_sq;
            break;
        }
        case WallKind::everywhere:
            member = true;
            break;
        case WallKind::empty:
            member = false;
            break;
    }
    bool equality = nu_cross(v, w, StabilityParams(alpha, beta, B), s) == 0;
    if (member != equality)
        throw std::logic_error("wall membership disagrees with slope equality; "
                               "wall does not match (v, w, B)");
    return member;
}

namespace {

// r < sqrt(q)
bool lt_sqrt(const Rational& r, const Rational& q) {
    if (r < 0) return true;
    return r * r < q;
}

bool witness_less(const KClass& a, const KClass& b) {
    if (a.ch0 != b.ch0) return a.ch0 < b.ch0;
    if (a.ch1.coords != b.ch1.coords) return a.ch1.coords < b.ch1.coords;
    return a.ch2 < b.ch2;
}

// Intersects the running interval [lo, hi] with {c2 : low <= k*c2 + off <= high},
// k != 0. Returns false when the interval becomes empty.
bool clamp_linear(const Rational& k, const Rational& off, const Rational& low,
                  const Rational& high, Rational& lo, Rational& hi) {
    Rational a = (low - off) / k;
    Rational b = (high - off) / k;
    if (k < 0) std::swap(a, b);
    if (a > lo) lo = a;
    if (b < hi) hi = b;
    return lo <= hi;
}

}  // namespace

bool wall_meets_region(const Wall& wall, const WallRegion& region) {
    if (region.alpha_max <= 0) return false;
    switch (wall.kind) {
        case WallKind::everywhere:
            return region.beta_min <= region.beta_max;
        case WallKind::empty:
            return false;
        case WallKind::vertical:
            return region.beta_min <= wall.beta && wall.beta <= region.beta_max;
        case WallKind::semicircle:
            break;
    }
    const Rational& c = wall.center;
    const Rational& rho = wall.radius_sq;
    // Open beta-span of the locus is (c - sqrt(rho), c + sqrt(rho)).
    if (!lt_sqrt(c - region.beta_max, rho)) return false;
    if (!lt_sqrt(region.beta_min - c, rho)) return false;
    // A circle foot inside the beta window lets alpha get arbitrarily small.
    // Left foot in: c - sqrt(rho) >= beta_min; right foot in: c + sqrt(rho) <= beta_max.
    bool left_foot_in = !lt_sqrt(c - region.beta_min, rho);
    bool right_foot_in = !lt_sqrt(region.beta_max - c, rho);
    if (left_foot_in || right_foot_in) return true;
    // Both feet stick out: the whole beta window sits inside the circle and
    // the smallest alpha over it occurs at the endpoint farther from c.
    Rational dl = region.beta_min - c;
    Rational dr = region.beta_max - c;
    Rational far_sq = dl * dl > dr * dr ? dl * dl : dr * dr;
    Rational min_alpha_sq = rho - far_sq;
    return min_alpha_sq <= region.alpha_max * region.alpha_max;
}

std::vector<Wall> enumerate_candidate_walls(const KClass& v, const DivisorClass& B,
                                            const SurfaceData& s, const WallRegion& region,
                                            const WallSearchBounds& bounds) {
    if (bounds.max_rank < 1 || bounds.max_c < 1)
        throw std::invalid_argument("search bounds must be positive");
    if (region.beta_min > region.beta_max)
        throw std::invalid_argument("empty region: beta_min > beta_max");
    if (v.ch0 == 0)
        throw std::invalid_argument("wall enumeration requires a class of nonzero rank");
    if (region.alpha_max <= 0) return {};

    const Rational disc_v = discriminant(v, s);
    if (disc_v < 0) return {};

    const Rational g = degree(s);
    const std::size_t n = static_cast<std::size_t>(s.rank);
    const Rational hv = intersect(s.H, v.ch1, s);

    // locus key -> best witness wall; kind order: vertical 0, semicircle 1
    std::map<std::tuple<int, Rational, Rational>, Wall> found;

    std::vector<long> c1(n, -bounds.max_c);
    bool done = false;
    while (!done) {
        DivisorClass d1 = DivisorClass::zero(n);
        for (std::size_t i = 0; i < n; ++i) d1.coords[i] = c1[i];
        const Rational hw = intersect(s.H, d1, s);
        const Rational hb = intersect(s.H, B, s);
        const Rational d1sq = intersect(d1, d1, s);
        const Rational q_w = hw * hw;  // discriminant(w) constant part
        const Rational dvw = hv - hw;
        const Rational q_vw = dvw * dvw;  // discriminant(v-w) constant part

        for (long r = -bounds.max_rank; r <= bounds.max_rank; ++r) {
            // d-bound on the twisted slope numerator H.ch1_B(w).
            Rational d_twisted = hw - Rational(r) * hb;
            if (d_twisted > bounds.max_c || d_twisted < -bounds.max_c) continue;

            // discriminant(w)   = q_w  - 2g. r       . c2
            // discriminant(v-w) = q_vw - 2g.(rv - r) .(c2v - c2)
            // Both must land in [0, disc_v] (their sum bounded by disc_v is
            // checked per class below); each is linear in c2, so c2 is
            // confined to an exact rational interval.
            Rational lo(-1), hi(1);
            bool first = true;
            {
                Rational k = -2 * g * Rational(r);
                if (k == 0) {
                    if (q_w < 0 || q_w > disc_v) continue;
                } else {
                    lo = (0 - q_w) / k;
                    hi = (disc_v - q_w) / k;
                    if (k < 0) std::swap(lo, hi);
                    first = false;
                }
            }
            {
                Rational rv_minus_r = v.ch0 - Rational(r);
                Rational k = 2 * g * rv_minus_r;
                Rational off = q_vw - 2 * g * rv_minus_r * v.ch2;
                if (k == 0) {
                    if (off < 0 || off > disc_v) continue;
                } else if (first) {
                    lo = (0 - off) / k;
                    hi = (disc_v - off) / k;
                    if (k < 0) std::swap(lo, hi);
                    first = false;
                } else {
                    if (!clamp_linear(k, off, Rational(0), disc_v, lo, hi)) continue;
                }
            }
            if (first) continue;  // no c2 constraint at all: skip (v would have rank 0)

            // ch2 = d1.d1/2 - t for the integral second Chern class t.
            Integer t_min = ceil_rational(d1sq / 2 - hi);
            Integer t_max = floor_rational(d1sq / 2 - lo);
            for (Integer t = t_min; t <= t_max; ++t) {
                KClass w(Rational(r), d1, d1sq / 2 - Rational(t));
                Rational dw = discriminant(w, s);
                Rational dvw_disc = discriminant(v - w, s);
                if (dw < 0 || dvw_disc < 0 || dw + dvw_disc > disc_v) continue;
                Wall wall = numerical_wall(v, w, B, s);
                if (wall.kind != WallKind::vertical && wall.kind != WallKind::semicircle)
                    continue;
                if (!wall_meets_region(wall, region)) continue;
                std::tuple<int, Rational, Rational> key =
                    wall.kind == WallKind::vertical
                        ? std::make_tuple(0, wall.beta, Rational(0))
                        : std::make_tuple(1, wall.center, wall.radius_sq);
                auto it = found.find(key);
                if (it == found.end()) {
                    found.emplace(std::move(key), std::move(wall));
                } else if (witness_less(wall.witness, it->second.witness)) {
                    it->second = std::move(wall);
                }
            }
        }

        // advance the ch1 multi-index
        std::size_t pos = 0;
        while (pos < n) {
            if (c1[pos] < bounds.max_c) {
                ++c1[pos];
                break;
            }
            c1[pos] = -bounds.max_c;
            ++pos;
        }
        done = pos == n;
    }

    std::vector<Wall> out;
    out.reserve(found.size());
    for (auto& [key, wall] : found) out.push_back(std::move(wall));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> check_nested(const std::vector<Wall>& walls,
                                                              const KClass& v,
                                                              const DivisorClass& B,
                                                              const SurfaceData& s) {
    const Rational beta0 = vertical_beta(v, B, s);
    std::vector<std::pair<std::size_t, std::size_t>> crossings;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (walls[i].kind != WallKind::semicircle) continue;
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            if (walls[j].kind != WallKind::semicircle) continue;
            const Rational si = walls[i].center - beta0;
            const Rational sj = walls[j].center - beta0;
            bool same_side = (si >= 0 && sj >= 0) || (si <= 0 && sj <= 0);
            if (!same_side) continue;
            const Rational& c1 = walls[i].center;
            const Rational& c2 = walls[j].center;
            const Rational& r1 = walls[i].radius_sq;
            const Rational& r2 = walls[j].radius_sq;
            if (c1 == c2) continue;  // concentric circles never cross
            // Radical line of the two circles, then the height there.
            Rational beta_star = ((r1 - r2) / (c2 - c1) + c1 + c2) / 2;
            Rational alpha_sq = r1 - (beta_star - c1) * (beta_star - c1);
            if (alpha_sq > 0) crossings.emplace_back(i, j);
        }
    }
    return crossings;
}

}  // namespace tiltlab
