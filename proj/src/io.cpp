#include "tiltlab/io.hpp"

#include <fstream>
#include <sstream>

namespace tiltlab {

namespace {

const Json& expect_member(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

long long expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer, got " + j.dump());
    return j.get<long long>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return Json(rational_to_string(r)); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Json divisor_to_json(const DivisorClass& d) {
    Json arr = Json::array();
    for (const auto& c : d.coords) arr.push_back(rational_to_json(c));
    return arr;
}

DivisorClass divisor_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coordinate array, got " + j.dump());
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (const auto& entry : j) coords.push_back(rational_from_json(entry));
    return DivisorClass(std::move(coords));
}

Json surface_to_json(const SurfaceData& s) {
    Json gram = Json::array();
    for (const auto& row : s.gram) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.get_si());
        gram.push_back(std::move(r));
    }
    Json h = Json::array();
    Json k = Json::array();
    for (const auto& c : s.H.coords) h.push_back(c.get_num().get_si());
    for (const auto& c : s.K.coords) k.push_back(c.get_num().get_si());
    return Json{{"rank", s.rank},
                {"gram", std::move(gram)},
                {"H", std::move(h)},
                {"K", std::move(k)},
                {"chiO", s.chiO.get_si()}};
}

SurfaceData surface_from_json(const Json& j) {
    SurfaceData s;
    s.rank = static_cast<int>(expect_int(expect_member(j, "rank", "surface"), "surface rank"));
    const Json& gram = expect_member(j, "gram", "surface");
    if (!gram.is_array()) throw ParseError("surface gram: expected an array of rows");
    for (const auto& row : gram) {
        if (!row.is_array()) throw ParseError("surface gram: expected integer rows");
        std::vector<Integer> r;
        for (const auto& e : row) r.emplace_back(static_cast<long>(expect_int(e, "gram entry")));
        s.gram.push_back(std::move(r));
    }
    auto integral_divisor = [&](const char* key) {
        const Json& arr = expect_member(j, key, "surface");
        if (!arr.is_array()) throw ParseError(std::string("surface ") + key + ": expected an array");
        std::vector<Rational> coords;
        for (const auto& e : arr) coords.emplace_back(static_cast<long>(expect_int(e, key)));
        return DivisorClass(std::move(coords));
    };
    s.H = integral_divisor("H");
    s.K = integral_divisor("K");
    s.chiO = Integer(static_cast<long>(expect_int(expect_member(j, "chiO", "surface"), "chiO")));
    return s;
}

Json kclass_to_json(const KClass& a) {
    return Json{{"ch0", rational_to_json(a.ch0)},
                {"ch1", divisor_to_json(a.ch1)},
                {"ch2", rational_to_json(a.ch2)}};
}

KClass kclass_from_json(const Json& j) {
    return {rational_from_json(expect_member(j, "ch0", "class")),
            divisor_from_json(expect_member(j, "ch1", "class")),
            rational_from_json(expect_member(j, "ch2", "class"))};
}

Json params_to_json(const StabilityParams& p) {
    return Json{{"alpha", rational_to_json(p.alpha)},
                {"beta", rational_to_json(p.beta)},
                {"B", divisor_to_json(p.B)}};
}

StabilityParams params_from_json(const Json& j) {
    Rational alpha = rational_from_json(expect_member(j, "alpha", "params"));
    Rational beta = rational_from_json(expect_member(j, "beta", "params"));
    DivisorClass B = divisor_from_json(expect_member(j, "B", "params"));
    if (alpha <= 0) throw ParseError("params: alpha must be positive");
    return StabilityParams(std::move(alpha), std::move(beta), std::move(B));
}

namespace {

const char* wall_kind_name(WallKind kind) {
    switch (kind) {
        case WallKind::vertical: return "vertical";
        case WallKind::semicircle: return "semicircle";
        case WallKind::everywhere: return "everywhere";
        case WallKind::empty: return "empty";
    }
    return "empty";
}

}  // namespace

Json wall_to_json(const Wall& w) {
    Json j{{"kind", wall_kind_name(w.kind)}};
    if (w.kind == WallKind::vertical) j["beta"] = rational_to_json(w.beta);
    if (w.kind == WallKind::semicircle) {
        j["center"] = rational_to_json(w.center);
        j["radius_sq"] = rational_to_json(w.radius_sq);
    }
    j["witness"] = kclass_to_json(w.witness);
    return j;
}

Json walls_to_json(const std::vector<Wall>& walls) {
    Json arr = Json::array();
    for (const auto& w : walls) arr.push_back(wall_to_json(w));
    return arr;
}

std::string walls_to_csv(const std::vector<Wall>& walls) {
    std::ostringstream out;
    out << "kind,beta,center,radius_sq,witness_ch0,witness_ch1,witness_ch2\n";
    for (const auto& w : walls) {
        out << wall_kind_name(w.kind) << ',';
        if (w.kind == WallKind::vertical) out << rational_to_string(w.beta);
        out << ',';
        if (w.kind == WallKind::semicircle) out << rational_to_string(w.center);
        out << ',';
        if (w.kind == WallKind::semicircle) out << rational_to_string(w.radius_sq);
        out << ',' << rational_to_string(w.witness.ch0) << ',';
        for (std::size_t i = 0; i < w.witness.ch1.coords.size(); ++i) {
            if (i) out << ' ';
            out << rational_to_string(w.witness.ch1.coords[i]);
        }
        out << ',' << rational_to_string(w.witness.ch2) << '\n';
    }
    return out.str();
}

Json curve_kclass_to_json(const CurveKClass& c) {
    return Json::array({rational_to_json(c.rank), rational_to_json(c.degree)});
}

CurveKClass curve_kclass_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("curve class: expected [rank, degree], got " + j.dump());
    return {rational_from_json(j.at(0)), rational_from_json(j.at(1))};
}

Json factor_to_json(const StableFactor& f) {
    if (f.kind == FactorKind::bundle)
        return Json{{"kind", "bundle"}, {"iso_id", f.iso_id}, {"cls", kclass_to_json(f.cls)}};
    return Json{{"kind", "skyscraper"}, {"point_id", f.point_id}};
}

StableFactor factor_from_json(const Json& j) {
    const Json& kind = expect_member(j, "kind", "factor");
    if (kind == "bundle") {
        const Json& iso = expect_member(j, "iso_id", "bundle factor");
        if (!iso.is_string()) throw ParseError("bundle factor: iso_id must be a string");
        return StableFactor::make_bundle(
            iso.get<std::string>(), kclass_from_json(expect_member(j, "cls", "bundle factor")));
    }
    if (kind == "skyscraper") {
        const Json& point = expect_member(j, "point_id", "skyscraper factor");
        if (!point.is_string()) throw ParseError("skyscraper factor: point_id must be a string");
        return StableFactor::make_skyscraper(point.get<std::string>());
    }
    throw ParseError("factor kind must be \"bundle\" or \"skyscraper\", got " + kind.dump());
}

Json polystable_to_json(const PolystableObject& x) {
    Json arr = Json::array();
    for (const auto& f : x.factors) arr.push_back(factor_to_json(f));
    return Json{{"factors", std::move(arr)}};
}

PolystableObject polystable_from_json(const Json& j) {
    const Json& factors = expect_member(j, "factors", "polystable object");
    if (!factors.is_array()) throw ParseError("polystable object: factors must be an array");
    PolystableObject x;
    for (const auto& f : factors) x.factors.push_back(factor_from_json(f));
    return x;
}

Json mock_to_json(const MockSheaf& m) {
    Json dd = Json::array();
    for (const auto& f : m.double_dual) {
        dd.push_back(Json{{"iso_id", f.iso_id}, {"cls", kclass_to_json(f.cls)}});
    }
    Json torsion = Json::object();
    for (const auto& [point, len] : m.torsion_lengths) torsion[point] = len.get_si();
    return Json{{"double_dual", std::move(dd)}, {"torsion", std::move(torsion)}};
}

MockSheaf mock_from_json(const Json& j) {
    MockSheaf m;
    const Json& dd = expect_member(j, "double_dual", "point description");
    if (!dd.is_array()) throw ParseError("point description: double_dual must be an array");
    for (const auto& entry : dd) {
        const Json& iso = expect_member(entry, "iso_id", "double_dual entry");
        if (!iso.is_string()) throw ParseError("double_dual entry: iso_id must be a string");
        m.double_dual.push_back(StableFactor::make_bundle(
            iso.get<std::string>(),
            kclass_from_json(expect_member(entry, "cls", "double_dual entry"))));
    }
    const Json& torsion = expect_member(j, "torsion", "point description");
    if (!torsion.is_object()) throw ParseError("point description: torsion must be an object");
    for (const auto& [point, len] : torsion.items()) {
        long long value = expect_int(len, "torsion length");
        if (value <= 0) throw ParseError("torsion length at " + point + " must be positive");
        m.torsion_lengths[point] = Integer(static_cast<long>(value));
    }
    return m;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

Json load_json_inline_or_file(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{' || c == '[') {
            try {
                return Json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(std::string("invalid inline JSON: ") + e.what());
            }
        }
        break;
    }
    return load_json_file(text);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw ParseError("failed writing file: " + path);
}

}  // namespace tiltlab
