#include "tiltlab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tiltlab {

std::string format_svg_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 48.0;

struct Frame {
    Rational beta_min;
    Rational beta_max;
    Rational alpha_max;
    Rational x_scale;
    Rational y_scale;

    double x(const Rational& beta) const {
        Rational v = kMargin + x_scale * (beta - beta_min);
        return v.get_d();
    }
    double y(const Rational& alpha) const {
        Rational v = (kHeight - kMargin) - y_scale * alpha;
        return v.get_d();
    }
};

}  // namespace

std::string render_walls_svg(const std::vector<Wall>& walls, const WallRegion& region) {
    if (region.beta_min > region.beta_max)
        throw std::invalid_argument("svg region has beta_min > beta_max");
    if (region.alpha_max <= 0)
        throw std::invalid_argument("svg region has nonpositive alpha_max");

    Frame f;
    f.beta_min = region.beta_min;
    f.beta_max = region.beta_max;
    f.alpha_max = region.alpha_max;
    if (f.beta_min == f.beta_max) {
        f.beta_min -= Rational(1, 2);
        f.beta_max += Rational(1, 2);
    }
    f.x_scale = Rational(static_cast<long>(kWidth - 2 * kMargin)) / (f.beta_max - f.beta_min);
    f.y_scale = Rational(static_cast<long>(kHeight - 2 * kMargin)) / f.alpha_max;

    Rational x_offset = Rational(static_cast<long>(kMargin)) - f.x_scale * f.beta_min;
    Rational y_offset(static_cast<long>(kHeight - kMargin));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out << "  <metadata id=\"plane-transform\">{"
        << "\"x\":\"x = x_scale*beta + x_offset\","
        << "\"x_scale\":\"" << rational_to_string(f.x_scale) << "\","
        << "\"x_offset\":\"" << rational_to_string(x_offset) << "\","
        << "\"y\":\"y = y_offset - y_scale*alpha\","
        << "\"y_scale\":\"" << rational_to_string(f.y_scale) << "\","
        << "\"y_offset\":\"" << rational_to_string(y_offset) << "\","
        << "\"beta_min\":\"" << rational_to_string(f.beta_min) << "\","
        << "\"beta_max\":\"" << rational_to_string(f.beta_max) << "\","
        << "\"alpha_max\":\"" << rational_to_string(f.alpha_max) << "\"}</metadata>\n";
    out << "  <style>.axis{stroke:#333;stroke-width:1}"
        << ".axis-label{font:12px sans-serif;fill:#333}"
        << ".wall-vertical{stroke:#c22;stroke-width:1.5}"
        << ".wall-arc{stroke:#26c;stroke-width:1.5;fill:none}</style>\n";
    out << "  <clipPath id=\"plot-area\"><rect x=\"" << format_svg_number(kMargin) << "\" y=\""
        << format_svg_number(kMargin) << "\" width=\"" << format_svg_number(kWidth - 2 * kMargin)
        << "\" height=\"" << format_svg_number(kHeight - 2 * kMargin)
        << "\"/></clipPath>\n";

    const double y0 = f.y(Rational(0));
    const double x_left = f.x(f.beta_min);
    const double x_right = f.x(f.beta_max);
    const double y_top = f.y(f.alpha_max);
    // beta axis
    out << "  <line class=\"axis\" x1=\"" << format_svg_number(x_left) << "\" y1=\""
        << format_svg_number(y0) << "\" x2=\"" << format_svg_number(x_right) << "\" y2=\""
        << format_svg_number(y0) << "\"/>\n";
    // alpha axis, drawn at beta = 0 when visible, else at the left edge
    double x_axis = (f.beta_min <= 0 && 0 <= f.beta_max) ? f.x(Rational(0)) : x_left;
    out << "  <line class=\"axis\" x1=\"" << format_svg_number(x_axis) << "\" y1=\""
        << format_svg_number(y0) << "\" x2=\"" << format_svg_number(x_axis) << "\" y2=\""
        << format_svg_number(y_top) << "\"/>\n";
    out << "  <text class=\"axis-label\" x=\"" << format_svg_number(x_left) << "\" y=\""
        << format_svg_number(y0 + 16) << "\">beta = " << rational_to_string(f.beta_min)
        << "</text>\n";
    out << "  <text class=\"axis-label\" x=\"" << format_svg_number(x_right - 64) << "\" y=\""
        << format_svg_number(y0 + 16) << "\">beta = " << rational_to_string(f.beta_max)
        << "</text>\n";
    out << "  <text class=\"axis-label\" x=\"" << format_svg_number(x_axis + 4) << "\" y=\""
        << format_svg_number(y_top - 4) << "\">alpha = " << rational_to_string(f.alpha_max)
        << "</text>\n";

    out << "  <g clip-path=\"url(#plot-area)\">\n";
    for (const Wall& w : walls) {
        if (w.kind == WallKind::vertical) {
            double x = f.x(w.beta);
            out << "    <line class=\"wall-vertical\" x1=\"" << format_svg_number(x)
                << "\" y1=\"" << format_svg_number(y0) << "\" x2=\"" << format_svg_number(x)
                << "\" y2=\"" << format_svg_number(y_top) << "\"/>\n";
        } else if (w.kind == WallKind::semicircle) {
            double radius = std::sqrt(w.radius_sq.get_d());
            double x1 = f.x(w.center) - f.x_scale.get_d() * radius;
            double x2 = f.x(w.center) + f.x_scale.get_d() * radius;
            double rx = f.x_scale.get_d() * radius;
            double ry = f.y_scale.get_d() * radius;
            out << "    <path class=\"wall-arc\" d=\"M " << format_svg_number(x1) << ' '
                << format_svg_number(y0) << " A " << format_svg_number(rx) << ' '
                << format_svg_number(ry) << " 0 0 1 " << format_svg_number(x2) << ' '
                << format_svg_number(y0) << "\"/>\n";
        }
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tiltlab
