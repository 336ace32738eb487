#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tiltlab/curve_restriction.hpp"
#include "tiltlab/io.hpp"
#include "tiltlab/moduli_points.hpp"
#include "tiltlab/svg.hpp"
#include "tiltlab/vertical.hpp"
#include "tiltlab/walls.hpp"

using namespace tiltlab;

namespace {

struct Options {
    std::string surface;
    std::string klass;
    std::string klass2;
    std::string twist;
    std::string alpha = "1";
    std::string beta = "0";
    std::string region = "-3,3,3";
    std::string bounds = "2,4";
    std::string format = "json";
    std::string out;
    std::string curve_class;
    std::string point;
    std::string point2;
    long a = 1;
    long m = 1;
    long r = 2;
    long r0 = 1;
    long genus = 0;
    long max_a = 4;
    long samples = 50;
    unsigned long long seed = 0;
};

SurfaceData load_surface(const std::string& arg) {
    SurfaceData s = surface_from_json(load_json_inline_or_file(arg));
    std::vector<std::string> violations = validate_surface(s);
    if (!violations.empty()) throw ParseError("inconsistent surface: " + violations.front());
    return s;
}

KClass load_kclass(const std::string& arg) {
    return kclass_from_json(load_json_inline_or_file(arg));
}

DivisorClass load_twist(const std::string& arg, const SurfaceData& s) {
    if (arg.empty()) return DivisorClass::zero(static_cast<std::size_t>(s.rank));
    DivisorClass B = divisor_from_json(load_json_inline_or_file(arg));
    if (B.dim() != static_cast<std::size_t>(s.rank))
        throw ParseError("twist divisor has " + std::to_string(B.dim()) +
                         " coordinates, surface rank is " + std::to_string(s.rank));
    return B;
}

std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

WallRegion parse_region(const std::string& text) {
    std::vector<std::string> parts = split_on_commas(text);
    if (parts.size() != 3)
        throw ParseError("region must be beta_min,beta_max,alpha_max, got \"" + text + "\"");
    return {parse_rational_arg(parts[0], "region beta_min"),
            parse_rational_arg(parts[1], "region beta_max"),
            parse_rational_arg(parts[2], "region alpha_max")};
}

WallSearchBounds parse_bounds(const std::string& text) {
    std::vector<std::string> parts = split_on_commas(text);
    if (parts.size() != 2)
        throw ParseError("bounds must be max_rank,max_c, got \"" + text + "\"");
    WallSearchBounds bounds;
    for (int i = 0; i < 2; ++i) {
        Rational r = parse_rational_arg(parts[static_cast<std::size_t>(i)], "bounds");
        if (!is_integer(r)) throw ParseError("bounds entries must be integers");
        (i == 0 ? bounds.max_rank : bounds.max_c) = r.get_num().get_si();
    }
    return bounds;
}

long integer_rank(const KClass& v) {
    if (!is_integer(v.ch0)) throw ParseError("class rank must be an integer");
    return v.ch0.get_num().get_si();
}

void emit_text(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

void emit_json(const Json& j, const std::string& out) { emit_text(j.dump(2) + "\n", out); }

KClass random_integral_class(std::mt19937_64& rng, const SurfaceData& s) {
    std::uniform_int_distribution<long> rank_pick(-4, 4);
    std::uniform_int_distribution<long> coord_pick(-5, 5);
    std::uniform_int_distribution<long> chern_pick(-6, 6);
    Rational ch0(rank_pick(rng));
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(s.rank));
    for (int i = 0; i < s.rank; ++i) coords.emplace_back(coord_pick(rng));
    DivisorClass ch1(std::move(coords));
    Rational ch2 = intersect(ch1, ch1, s) / 2 - Rational(chern_pick(rng));
    return {std::move(ch0), std::move(ch1), std::move(ch2)};
}

int run_validate_surface(const Options& opt) {
    SurfaceData s = surface_from_json(load_json_inline_or_file(opt.surface));
    std::vector<std::string> violations = validate_surface(s);
    Json report{{"valid", violations.empty()}, {"violations", violations}};
    emit_json(report, opt.out);
    return violations.empty() ? 0 : 1;
}

int run_euler(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    Rational chi = euler_pairing(load_kclass(opt.klass), load_kclass(opt.klass2), s);
    std::cout << rational_to_string(chi) << '\n';
    return 0;
}

int run_twist(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    KClass a = load_kclass(opt.klass);
    emit_json(kclass_to_json(twist_B(a, load_twist(opt.twist, s), s)), opt.out);
    return 0;
}

int run_slope(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    SlopeValue mu = mu_B(load_kclass(opt.klass), load_twist(opt.twist, s), s);
    std::cout << (mu.is_finite() ? rational_to_string(mu.value) : "inf") << '\n';
    return 0;
}

int run_charge(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    StabilityParams p(parse_rational_arg(opt.alpha, "alpha"), parse_rational_arg(opt.beta, "beta"),
                      load_twist(opt.twist, s));
    CentralChargeValue z = central_charge(load_kclass(opt.klass), p, s);
    emit_json(Json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}}, opt.out);
    return 0;
}

int run_vertical_wall(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    Rational beta0 = vertical_beta(load_kclass(opt.klass), load_twist(opt.twist, s), s);
    std::cout << rational_to_string(beta0) << '\n';
    return 0;
}

Json crossings_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& crossings) {
    Json arr = Json::array();
    for (const auto& [i, j] : crossings) arr.push_back(Json::array({i, j}));
    return arr;
}

int run_walls(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    KClass v = load_kclass(opt.klass);
    DivisorClass B = load_twist(opt.twist, s);
    std::vector<Wall> walls =
        enumerate_candidate_walls(v, B, s, parse_region(opt.region), parse_bounds(opt.bounds));
    auto crossings = check_nested(walls, v, B, s);
    if (opt.format == "csv") {
        emit_text(walls_to_csv(walls), opt.out);
    } else if (opt.format == "json") {
        emit_json(Json{{"walls", walls_to_json(walls)},
                       {"crossings", crossings_to_json(crossings)},
                       {"nested_ok", crossings.empty()}},
                  opt.out);
    } else {
        throw ParseError("walls emits json or csv; use plot-walls for svg");
    }
    return crossings.empty() ? 0 : 1;
}

int run_u_class(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    emit_json(kclass_to_json(u_class(load_kclass(opt.klass), s)), opt.out);
    return 0;
}

int run_check_identities(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    KClass v = load_kclass(opt.klass);
    DivisorClass B = load_twist(opt.twist, s);
    Rational alpha = parse_rational_arg(opt.alpha, "alpha");
    VerticalWallData data = make_vertical_wall_data(v, B, s);

    bool all_hold = true;
    Json identity = Json::object();
    for (long a = 1; a <= opt.max_a; ++a) {
        bool holds = curve_power_identity(v, Integer(a), s);
        identity[std::to_string(a)] = holds;
        all_hold = all_hold && holds;
    }

    Rational multiplier = data.multiplier_at(alpha);
    Json failures = Json::array();
    std::mt19937_64 rng(opt.seed);
    for (long i = 0; i < opt.samples; ++i) {
        KClass a = random_integral_class(rng, s);
        Rational lhs = im_ratio(a, v, alpha, B, s);
        Rational rhs = multiplier * chi_with_u(a, v, B, s);
        if (lhs != rhs) {
            failures.push_back(Json{{"class", kclass_to_json(a)},
                                    {"im_ratio", rational_to_string(lhs)},
                                    {"multiplier_times_chi", rational_to_string(rhs)}});
        }
    }

    Json report{{"u", kclass_to_json(data.u)},
                {"beta0", rational_to_string(data.beta0)},
                {"identity_a2u", std::move(identity)},
                {"proportionality_failures", std::move(failures)},
                {"alpha", rational_to_string(alpha)},
                {"samples", opt.samples},
                {"seed", opt.seed}};
    emit_json(report, opt.out);
    return (all_hold && report["proportionality_failures"].empty()) ? 0 : 1;
}

int run_restrict(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    KClass v = load_kclass(opt.klass);
    Integer a(opt.a);
    CurveContext ctx = make_curve_context(a, s);
    CurveKClass vc = restrict_class(v, a, s);
    CurveKClass g = complement_class(v, a, Integer(opt.m), s);
    Rational chi = curve_chi(vc, g, ctx.genus);
    Integer flenner = flenner_min_degree(Integer(integer_rank(v)), s);
    Json report{{"a", opt.a},
                {"genus", ctx.genus.get_si()},
                {"flenner_min", flenner.get_si()},
                {"v_restricted", curve_kclass_to_json(vc)},
                {"G", curve_kclass_to_json(g)},
                {"chi_vG", rational_to_string(chi)}};
    emit_json(report, opt.out);
    return chi == 0 ? 0 : 1;
}

int run_flenner(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    std::cout << flenner_min_degree(Integer(opt.r), s).get_str() << '\n';
    return 0;
}

int run_seshadri(const Options& opt, bool have_r, bool have_r0) {
    if (have_r == have_r0) throw ParseError("seshadri needs exactly one of --r or --r0");
    CurveKClass f = curve_kclass_from_json(load_json_inline_or_file(opt.curve_class));
    Integer g(opt.genus);
    if (have_r) {
        std::optional<Integer> d = seshadri_degree(f, Integer(opt.r), g);
        if (!d) {
            emit_json(Json{{"r", opt.r}, {"integral", false}}, opt.out);
            return 1;
        }
        emit_json(Json{{"r", opt.r}, {"degree", d->get_si()}, {"integral", true}}, opt.out);
        return 0;
    }
    std::optional<std::pair<Integer, Integer>> found = seshadri_first_rank(f, Integer(opt.r0), g);
    if (!found) {
        emit_json(Json{{"r0", opt.r0}, {"integral", false}}, opt.out);
        return 1;
    }
    emit_json(Json{{"r", found->first.get_si()},
                   {"degree", found->second.get_si()},
                   {"integral", true}},
              opt.out);
    return 0;
}

int run_g_class(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    CurveKClass g = complement_class(load_kclass(opt.klass), Integer(opt.a), Integer(opt.m), s);
    emit_json(curve_kclass_to_json(g), opt.out);
    return 0;
}

// A point argument is either a mock sheaf {"double_dual", "torsion"} or a
// polystable object {"factors"}; both views are kept.
std::pair<MockSheaf, PolystableObject> load_point(const std::string& arg) {
    Json j = load_json_inline_or_file(arg);
    if (j.is_object() && j.contains("double_dual")) {
        MockSheaf m = mock_from_json(j);
        return {m, sigma_graded(m)};
    }
    if (j.is_object() && j.contains("factors")) {
        PolystableObject x = polystable_from_json(j);
        return {mock_from_polystable(x), x};
    }
    throw ParseError("point must be {\"double_dual\",...} or {\"factors\":[...]}");
}

int run_classify(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    auto [m1, x1] = load_point(opt.point);
    if (opt.point2.empty()) {
        if (opt.klass.empty())
            throw ParseError("classify needs --class to validate a single point");
        KClass v = load_kclass(opt.klass);
        DivisorClass B = load_twist(opt.twist, s);
        std::vector<std::string> violations = validate_polystable(x1, v, B, s);
        Json report{{"graded", polystable_to_json(x1)},
                    {"total", kclass_to_json(total_class(x1, s))},
                    {"valid", violations.empty()},
                    {"violations", violations}};
        emit_json(report, opt.out);
        return violations.empty() ? 0 : 1;
    }
    auto [m2, x2] = load_point(opt.point2);
    bool uhl = uhlenbeck_equivalent(m1, m2);
    bool sig = s_equivalent(x1, x2);
    Json report{{"uhlenbeck_equivalent", uhl},
                {"s_equivalent", sig},
                {"consistent", uhl == sig}};
    emit_json(report, opt.out);
    return uhl == sig ? 0 : 1;
}

int run_plot_walls(const Options& opt) {
    SurfaceData s = load_surface(opt.surface);
    KClass v = load_kclass(opt.klass);
    DivisorClass B = load_twist(opt.twist, s);
    WallRegion region = parse_region(opt.region);
    std::vector<Wall> walls =
        enumerate_candidate_walls(v, B, s, region, parse_bounds(opt.bounds));
    auto crossings = check_nested(walls, v, B, s);
    write_text_file(opt.out, render_walls_svg(walls, region));
    std::string sidecar = opt.out + ".json";
    emit_json(Json{{"walls", walls_to_json(walls)},
                   {"crossings", crossings_to_json(crossings)},
                   {"nested_ok", crossings.empty()}},
              sidecar);
    emit_json(Json{{"svg", opt.out},
                   {"sidecar", sidecar},
                   {"wall_count", walls.size()}},
              "");
    return crossings.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for tilt stability on polarized surfaces"};
    app.require_subcommand(1);
    Options opt;
    int code = 0;

    auto add_surface = [&](CLI::App* cmd) {
        cmd->add_option("--surface", opt.surface, "surface JSON (file or inline)")->required();
    };
    auto add_class = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--class", opt.klass, "Chern class JSON (file or inline)");
        if (required) o->required();
    };
    auto add_twist = [&](CLI::App* cmd) {
        cmd->add_option("--B", opt.twist, "twist divisor as a coordinate array (default 0)");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "write the report here instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate-surface", "check surface data consistency");
    add_surface(validate);
    add_out(validate);
    validate->callback([&] { code = run_validate_surface(opt); });

    CLI::App* euler = app.add_subcommand("euler", "Euler pairing of two classes");
    add_surface(euler);
    add_class(euler);
    euler->add_option("--class2", opt.klass2, "second class JSON")->required();
    euler->callback([&] { code = run_euler(opt); });

    CLI::App* twist = app.add_subcommand("twist", "twisted Chern character");
    add_surface(twist);
    add_class(twist);
    add_twist(twist);
    add_out(twist);
    twist->callback([&] { code = run_twist(opt); });

    CLI::App* slope = app.add_subcommand("slope", "twisted slope (or inf)");
    add_surface(slope);
    add_class(slope);
    add_twist(slope);
    slope->callback([&] { code = run_slope(opt); });

    CLI::App* charge = app.add_subcommand("charge", "central charge at (alpha, beta, B)");
    add_surface(charge);
    add_class(charge);
    add_twist(charge);
    charge->add_option("--alpha", opt.alpha, "alpha as p/q (default 1)");
    charge->add_option("--beta", opt.beta, "beta as p/q (default 0)");
    add_out(charge);
    charge->callback([&] { code = run_charge(opt); });

    CLI::App* vwall = app.add_subcommand("vertical-wall", "wall location beta0 of a class");
    add_surface(vwall);
    add_class(vwall);
    add_twist(vwall);
    vwall->callback([&] { code = run_vertical_wall(opt); });

    CLI::App* walls = app.add_subcommand("walls", "enumerate candidate walls in a region");
    add_surface(walls);
    add_class(walls);
    add_twist(walls);
    walls->add_option("--region", opt.region, "beta_min,beta_max,alpha_max (default -3,3,3)");
    walls->add_option("--bounds", opt.bounds, "max_rank,max_c (default 2,4)");
    walls->add_option("--format", opt.format, "json or csv (default json)");
    add_out(walls);
    walls->callback([&] { code = run_walls(opt); });

    CLI::App* uclass = app.add_subcommand("u-class", "determinantal class u of v");
    add_surface(uclass);
    add_class(uclass);
    add_out(uclass);
    uclass->callback([&] { code = run_u_class(opt); });

    CLI::App* check = app.add_subcommand(
        "check-identities", "curve-power identity sweep plus randomized proportionality check");
    add_surface(check);
    add_class(check);
    add_twist(check);
    check->add_option("--alpha", opt.alpha, "alpha for the proportionality check (default 1)");
    check->add_option("--max-a", opt.max_a, "check the power identity for a = 1..max_a");
    check->add_option("--samples", opt.samples, "number of random classes (default 50)");
    check->add_option("--seed", opt.seed, "RNG seed")->required();
    add_out(check);
    check->callback([&] { code = run_check_identities(opt); });

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "restriction report on a curve in |aH|");
    add_surface(restrict_cmd);
    add_class(restrict_cmd);
    restrict_cmd->add_option("--a", opt.a, "curve degree multiple a (default 1)");
    restrict_cmd->add_option("--m", opt.m, "complement multiplicity m (default 1)");
    add_out(restrict_cmd);
    restrict_cmd->callback([&] { code = run_restrict(opt); });

    CLI::App* flenner = app.add_subcommand("flenner", "least restriction degree for rank r");
    add_surface(flenner);
    flenner->add_option("--r", opt.r, "rank bound (default 2)");
    flenner->callback([&] { code = run_flenner(opt); });

    CLI::App* seshadri = app.add_subcommand("seshadri", "complement degree with chi = 0 on a curve");
    seshadri->add_option("--curve-class", opt.curve_class, "[rank, degree] JSON")->required();
    seshadri->add_option("--genus", opt.genus, "curve genus")->required();
    CLI::Option* opt_r = seshadri->add_option("--r", opt.r, "rank of the complement");
    CLI::Option* opt_r0 = seshadri->add_option("--r0", opt.r0, "search from this rank upward");
    add_out(seshadri);
    seshadri->callback(
        [&, opt_r, opt_r0] { code = run_seshadri(opt, opt_r->count() > 0, opt_r0->count() > 0); });

    CLI::App* gclass = app.add_subcommand("g-class", "complement class G = -m.(w|_C)");
    add_surface(gclass);
    add_class(gclass);
    gclass->add_option("--a", opt.a, "curve degree multiple a (default 1)");
    gclass->add_option("--m", opt.m, "multiplicity m (default 1)");
    add_out(gclass);
    gclass->callback([&] { code = run_g_class(opt); });

    CLI::App* classify = app.add_subcommand(
        "classify", "validate a moduli point or compare two of them");
    add_surface(classify);
    add_class(classify, false);
    add_twist(classify);
    classify->add_option("--point", opt.point, "mock sheaf or factor list JSON")->required();
    classify->add_option("--point2", opt.point2, "second point for a comparison");
    add_out(classify);
    classify->callback([&] { code = run_classify(opt); });

    CLI::App* plot = app.add_subcommand("plot-walls", "render the wall diagram as SVG");
    add_surface(plot);
    add_class(plot);
    add_twist(plot);
    plot->add_option("--region", opt.region, "beta_min,beta_max,alpha_max (default -3,3,3)");
    plot->add_option("--bounds", opt.bounds, "max_rank,max_c (default 2,4)");
    plot->add_option("--out", opt.out, "SVG output path; sidecar JSON goes to out + \".json\"")
        ->required();
    plot->callback([&] { code = run_plot_walls(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}
