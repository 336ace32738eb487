#include "tiltlab/moduli_points.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiltlab/tilt.hpp"

namespace tiltlab {

StableFactor StableFactor::make_bundle(std::string iso_id, KClass cls) {
    StableFactor f;
    f.kind = FactorKind::bundle;
    f.iso_id = std::move(iso_id);
    f.cls = std::move(cls);
    return f;
}

StableFactor StableFactor::make_skyscraper(std::string point_id) {
    StableFactor f;
    f.kind = FactorKind::skyscraper;
    f.point_id = std::move(point_id);
    return f;
}

namespace {

void require_mock_invariants(const MockSheaf& mock) {
    for (const auto& f : mock.double_dual) {
        if (f.kind != FactorKind::bundle)
            throw std::invalid_argument("double dual may contain bundle factors only");
    }
    for (const auto& [point, len] : mock.torsion_lengths) {
        if (len <= 0)
            throw std::invalid_argument("torsion length at " + point + " must be positive");
    }
}

// Multiset identity of a factor: bundles by iso token, skyscrapers by point.
std::pair<int, std::string> factor_key(const StableFactor& f) {
    if (f.kind == FactorKind::bundle) return {0, f.iso_id};
    return {1, f.point_id};
}

std::vector<std::pair<int, std::string>> sorted_keys(const std::vector<StableFactor>& factors) {
    std::vector<std::pair<int, std::string>> keys;
    keys.reserve(factors.size());
    for (const auto& f : factors) keys.push_back(factor_key(f));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

PolystableObject sigma_graded(const MockSheaf& mock) {
    require_mock_invariants(mock);
    PolystableObject obj;
    obj.factors = mock.double_dual;
    for (const auto& [point, len] : mock.torsion_lengths) {
        for (Integer i = 0; i < len; ++i)
            obj.factors.push_back(StableFactor::make_skyscraper(point));
    }
    return obj;
}

bool s_equivalent(const PolystableObject& x, const PolystableObject& y) {
    return sorted_keys(x.factors) == sorted_keys(y.factors);
}

bool uhlenbeck_equivalent(const MockSheaf& m1, const MockSheaf& m2) {
    require_mock_invariants(m1);
    require_mock_invariants(m2);
    return sorted_keys(m1.double_dual) == sorted_keys(m2.double_dual) &&
           m1.torsion_lengths == m2.torsion_lengths;
}

KClass total_class(const PolystableObject& x, const SurfaceData& s) {
    KClass total(Rational(0), DivisorClass::zero(s.rank), Rational(0));
    for (const auto& f : x.factors) {
        if (f.kind == FactorKind::bundle) {
            total = total + f.cls;
        } else {
            total.ch2 -= 1;
        }
    }
    return total;
}

std::vector<std::string> validate_polystable(const PolystableObject& x, const KClass& v,
                                             const DivisorClass& B, const SurfaceData& s) {
    std::vector<std::string> violations;
    if (v.ch0 <= 0) {
        violations.push_back("v must have positive rank");
        return violations;
    }
    Rational beta0 = vertical_beta(v, B, s);
    for (std::size_t i = 0; i < x.factors.size(); ++i) {
        const StableFactor& f = x.factors[i];
        if (f.kind != FactorKind::bundle) continue;
        if (f.cls.ch0 <= 0) {
            violations.push_back("bundle factor " + std::to_string(i) +
                                 " has nonpositive rank " + rational_to_string(f.cls.ch0));
            continue;
        }
        SlopeValue mu = mu_B(f.cls, B, s);
        if (!(mu == SlopeValue::finite(beta0))) {
            violations.push_back("bundle factor " + std::to_string(i) + " has slope " +
                                 (mu.is_finite() ? rational_to_string(mu.value) : "inf") +
                                 ", wall sits at " + rational_to_string(beta0));
        }
        Rational disc = discriminant(f.cls, s);
        if (disc < 0) {
            violations.push_back("bundle factor " + std::to_string(i) +
                                 " has negative support form " + rational_to_string(disc));
        }
    }
    KClass total = total_class(x, s);
    if (!(total == v)) {
        violations.push_back("total class (" + rational_to_string(total.ch0) + ", ...) " +
                             "does not equal v");
    }
    return violations;
}

MockSheaf mock_from_polystable(const PolystableObject& x) {
    MockSheaf mock;
    for (const auto& f : x.factors) {
        switch (f.kind) {
            case FactorKind::bundle:
                if (f.iso_id.empty())
                    throw std::invalid_argument("bundle factor with empty iso token");
                mock.double_dual.push_back(f);
                break;
            case FactorKind::skyscraper:
                if (f.point_id.empty())
                    throw std::invalid_argument("skyscraper factor with empty point token");
                mock.torsion_lengths[f.point_id] += 1;
                break;
        }
    }
    return mock;
}

}  // namespace tiltlab
