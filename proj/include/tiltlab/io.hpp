#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tiltlab/curve_restriction.hpp"
#include "tiltlab/kclass.hpp"
#include "tiltlab/moduli_points.hpp"
#include "tiltlab/surface_lattice.hpp"
#include "tiltlab/tilt.hpp"
#include "tiltlab/walls.hpp"

namespace tiltlab {

// Key order is preserved so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rationals travel as canonical "p" / "p/q" strings; plain JSON integers are
// accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

// {"rank":int, "gram":[[int]], "H":[int], "K":[int], "chiO":int}
Json surface_to_json(const SurfaceData& s);
SurfaceData surface_from_json(const Json& j);

// {"ch0": rat, "ch1": [rat], "ch2": rat}
Json kclass_to_json(const KClass& a);
KClass kclass_from_json(const Json& j);

// {"alpha": rat, "beta": rat, "B": [rat]}
Json params_to_json(const StabilityParams& p);
StabilityParams params_from_json(const Json& j);

Json wall_to_json(const Wall& w);
Json walls_to_json(const std::vector<Wall>& walls);
std::string walls_to_csv(const std::vector<Wall>& walls);

Json curve_kclass_to_json(const CurveKClass& c);
CurveKClass curve_kclass_from_json(const Json& j);

// {"double_dual":[{"iso_id":str,"cls":KClass}], "torsion":{point:len}}
Json mock_to_json(const MockSheaf& m);
MockSheaf mock_from_json(const Json& j);

Json factor_to_json(const StableFactor& f);
StableFactor factor_from_json(const Json& j);

// {"factors":[factor]}
Json polystable_to_json(const PolystableObject& x);
PolystableObject polystable_from_json(const Json& j);

Json load_json_file(const std::string& path);
// Parses text that is either inline JSON (first non-space byte '{' or '[')
// or a path to a JSON file.
Json load_json_inline_or_file(const std::string& text);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tiltlab
