#include "tiltlab/surface_lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace tiltlab {

bool DivisorClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool DivisorClass::is_integral() const {
    for (const auto& c : coords)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

void require_same_dim(const DivisorClass& a, const DivisorClass& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("divisor class dimension mismatch");
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_dim(a, b);
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_dim(a, b);
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

DivisorClass operator*(const Rational& c, const DivisorClass& a) {
    DivisorClass r = a;
    for (auto& x : r.coords) x *= c;
    return r;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coords == b.coords;
}

Rational intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceData& s) {
    const std::size_t n = static_cast<std::size_t>(s.rank);
    if (d1.dim() != n || d2.dim() != n)
        throw std::invalid_argument("divisor class dimension does not match surface rank");
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational term = d1.coords[i] * Rational(s.gram[i][j]);
            term *= d2.coords[j];
            total += term;
        }
    }
    return total;
}

Rational degree(const SurfaceData& s) { return intersect(s.H, s.H, s); }

std::vector<std::string> validate_surface(const SurfaceData& s) {
    std::vector<std::string> violations;
    if (s.rank < 1) {
        violations.push_back("rank must be positive, got " + std::to_string(s.rank));
        return violations;
    }
    const std::size_t n = static_cast<std::size_t>(s.rank);
    if (s.gram.size() != n) {
        violations.push_back("gram has " + std::to_string(s.gram.size()) + " rows, expected " +
                             std::to_string(n));
        return violations;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (s.gram[i].size() != n) {
            violations.push_back("gram row " + std::to_string(i) + " has " +
                                 std::to_string(s.gram[i].size()) + " entries, expected " +
                                 std::to_string(n));
            return violations;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.gram[i][j] != s.gram[j][i]) {
                std::ostringstream msg;
                msg << "gram not symmetric at (" << i << "," << j << "): " << s.gram[i][j]
                    << " vs " << s.gram[j][i];
                violations.push_back(msg.str());
            }
        }
    }
    if (s.H.dim() != n) {
        violations.push_back("H has " + std::to_string(s.H.dim()) + " coords, expected " +
                             std::to_string(n));
        return violations;
    }
    if (s.K.dim() != n) {
        violations.push_back("K has " + std::to_string(s.K.dim()) + " coords, expected " +
                             std::to_string(n));
        return violations;
    }
    if (!s.H.is_integral()) violations.push_back("H must have integer coords");
    if (!s.K.is_integral()) violations.push_back("K must have integer coords");
    if (intersect(s.H, s.H, s) <= 0)
        violations.push_back("H.H > 0 fails: H.H = " + rational_to_string(intersect(s.H, s.H, s)));
    for (std::size_t i = 0; i < n; ++i) {
        DivisorClass basis = DivisorClass::zero(n);
        basis.coords[i] = 1;
        Rational parity = intersect(basis, basis, s) + intersect(basis, s.K, s);
        Integer num = parity.get_num();
        if (!is_integer(parity) || mpz_odd_p(num.get_mpz_t())) {
            violations.push_back("basis divisor " + std::to_string(i) +
                                 " fails parity: D.D + D.K = " + rational_to_string(parity));
        }
    }
    return violations;
}

namespace {

DivisorClass make_divisor(std::vector<long> entries) {
    std::vector<Rational> coords;
    coords.reserve(entries.size());
    for (long e : entries) coords.emplace_back(e);
    return DivisorClass(std::move(coords));
}

}  // namespace

SurfaceData surface_s1() {
    SurfaceData s;
    s.rank = 1;
    s.gram = {{Integer(1)}};
    s.H = make_divisor({1});
    s.K = make_divisor({-3});
    s.chiO = 1;
    return s;
}

SurfaceData surface_s2() {
    SurfaceData s;
    s.rank = 2;
    s.gram = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
    s.H = make_divisor({1, 1});
    s.K = make_divisor({-2, -2});
    s.chiO = 1;
    return s;
}

}  // namespace tiltlab
