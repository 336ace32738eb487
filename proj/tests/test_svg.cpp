#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tiltlab/svg.hpp"

using namespace tiltlab;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

std::string metadata_payload(const std::string& svg) {
    const std::string open = "<metadata id=\"plane-transform\">";
    std::size_t start = svg.find(open);
    REQUIRE(start != std::string::npos);
    start += open.size();
    std::size_t end = svg.find("</metadata>", start);
    REQUIRE(end != std::string::npos);
    return svg.substr(start, end - start);
}

Wall vertical_wall(Rational beta) {
    Wall w;
    w.kind = WallKind::vertical;
    w.beta = std::move(beta);
    w.witness = KClass(Rational(1), DivisorClass::zero(1), Rational(0));
    return w;
}

Wall arc_wall(Rational center, Rational radius_sq) {
    Wall w;
    w.kind = WallKind::semicircle;
    w.center = std::move(center);
    w.radius_sq = std::move(radius_sq);
    w.witness = KClass(Rational(1), DivisorClass::zero(1), Rational(0));
    return w;
}

const WallRegion kRegion{Rational(-3), Rational(3), Rational(3)};

}  // namespace

TEST_CASE("fixed-precision coordinate formatting") {
    CHECK(format_svg_number(1.0) == "1.0000");
    CHECK(format_svg_number(0.125) == "0.1250");
    CHECK(format_svg_number(-2.5) == "-2.5000");
    CHECK(format_svg_number(0.0) == "0.0000");
}

TEST_CASE("empty diagram still carries axes, style, clip and metadata") {
    std::string svg = render_walls_svg({}, kRegion);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);
    CHECK(count_occurrences(svg, "<line class=\"axis\"") == 2);
    CHECK(count_occurrences(svg, "class=\"wall-vertical\"") == 0);
    CHECK(count_occurrences(svg, "class=\"wall-arc\"") == 0);
    CHECK(svg.find("<clipPath id=\"plot-area\">") != std::string::npos);
    CHECK(svg.find("<style>") != std::string::npos);
    CHECK(svg.find("beta = -3") != std::string::npos);
    CHECK(svg.find("beta = 3") != std::string::npos);
    CHECK(svg.find("alpha = 3") != std::string::npos);
}

TEST_CASE("plane transform metadata is exact and parseable") {
    std::string svg = render_walls_svg({}, kRegion);
    nlohmann::json meta = nlohmann::json::parse(metadata_payload(svg));
    CHECK(meta.at("x_scale") == "272/3");
    CHECK(meta.at("x_offset") == "320");
    CHECK(meta.at("y_scale") == "128");
    CHECK(meta.at("y_offset") == "432");
    CHECK(meta.at("beta_min") == "-3");
    CHECK(meta.at("beta_max") == "3");
    CHECK(meta.at("alpha_max") == "3");
}

TEST_CASE("vertical wall lands where the transform says") {
    std::string svg = render_walls_svg({vertical_wall(Rational(0))}, kRegion);
    // x = 48 + (272/3).(0 - (-3)) = 320; alpha spans [0, 3] -> y in [432, 48]
    CHECK(svg.find("<line class=\"wall-vertical\" x1=\"320.0000\" y1=\"432.0000\" "
                   "x2=\"320.0000\" y2=\"48.0000\"/>") != std::string::npos);
}

TEST_CASE("semicircle renders as a single arc path") {
    std::string svg = render_walls_svg({arc_wall(Rational(-3, 2), Rational(1, 4))}, kRegion);
    CHECK(svg.find("<path class=\"wall-arc\" d=\"M 138.6667 432.0000 "
                   "A 45.3333 64.0000 0 0 1 229.3333 432.0000\"/>") != std::string::npos);
}

TEST_CASE("element counts follow the wall list") {
    std::vector<Wall> walls{vertical_wall(Rational(0)), vertical_wall(Rational(1, 2)),
                            arc_wall(Rational(-3, 2), Rational(1, 4)),
                            arc_wall(Rational(1), Rational(4)),
                            arc_wall(Rational(-1), Rational(9, 16))};
    Wall degenerate;
    degenerate.kind = WallKind::everywhere;
    walls.push_back(degenerate);
    degenerate.kind = WallKind::empty;
    walls.push_back(degenerate);

    std::string svg = render_walls_svg(walls, kRegion);
    CHECK(count_occurrences(svg, "class=\"wall-vertical\"") == 2);
    CHECK(count_occurrences(svg, "class=\"wall-arc\"") == 3);
}

TEST_CASE("degenerate beta span is padded symmetrically") {
    WallRegion thin{Rational(2), Rational(2), Rational(1)};
    std::string svg = render_walls_svg({vertical_wall(Rational(2))}, thin);
    nlohmann::json meta = nlohmann::json::parse(metadata_payload(svg));
    CHECK(meta.at("beta_min") == "3/2");
    CHECK(meta.at("beta_max") == "5/2");
    CHECK(meta.at("x_scale") == "544");
    // beta = 2 sits dead center
    CHECK(svg.find("<line class=\"wall-vertical\" x1=\"320.0000\"") != std::string::npos);
}

TEST_CASE("invalid regions are rejected") {
    CHECK_THROWS_AS(render_walls_svg({}, WallRegion{Rational(1), Rational(0), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_walls_svg({}, WallRegion{Rational(0), Rational(1), Rational(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_walls_svg({}, WallRegion{Rational(0), Rational(1), Rational(-2)}),
                    std::invalid_argument);
}

TEST_CASE("rendering is deterministic") {
    std::vector<Wall> walls{vertical_wall(Rational(1, 3)),
                            arc_wall(Rational(-5, 7), Rational(13, 9))};
    std::string first = render_walls_svg(walls, kRegion);
    std::string second = render_walls_svg(walls, kRegion);
    CHECK(first == second);
    CHECK(first.size() > 0);
}
