// rectloci: rectangle-center loci of line pairs.
//
// Subcommands take a scene file (JSON) plus pair selectors and print JSON to
// standard output.  Exit codes: 0 success, 1 oracle/check failure, 2 input
// or validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rectloci/render.hpp"
#include "rectloci/scene.hpp"

using namespace rectloci;
using nlohmann::json;

namespace {

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

Point2 parse_point_arg(const std::string& s) {
    double x, y;
    char tail;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2)
        throw SceneError("expected 'x,y' but got '" + s + "'");
    return make_point(x, y);
}

LocusClass scene_locus(const Scene& scene, const std::string& s1,
                       const std::string& s2) {
    const LinePair p1 = scene.pair_for(s1);
    const LinePair p2 = scene.pair_for(s2);
    if (scene.metric)
        return locus_in_metric(make_inner_product(*scene.metric), p1, p2);
    return compute_locus(p1, p2);
}

LineSet4 scene_line_set4(const Scene& scene) {
    if (scene.lines.size() != 4)
        throw SceneError("catalog needs a scene with exactly 4 lines, got " +
                         std::to_string(scene.lines.size()));
    return make_line_set4({scene.lines[0].line, scene.lines[1].line,
                           scene.lines[2].line, scene.lines[3].line});
}

int run(int argc, char** argv) {
    CLI::App app{"Rectangle-center loci of line pairs"};
    app.require_subcommand(1);

    std::string scene_path, pair1, pair2, point_arg, out_path;
    double angle = 0.0;
    bool have_angle = false;
    std::vector<double> conic_coeffs;
    double u_param = 0.0;
    double tol = 1e-6;
    bool with_oracle = false;

    auto add_scene = [&](CLI::App* cmd) {
        cmd->add_option("scene", scene_path, "scene JSON file")->required();
    };
    auto add_pairs = [&](CLI::App* cmd) {
        cmd->add_option("pair1", pair1, "first pair, e.g. AB or A,B")->required();
        cmd->add_option("pair2", pair2, "second pair, e.g. CD")->required();
    };

    auto* locus_cmd = app.add_subcommand("locus", "classify the rectangle locus");
    add_scene(locus_cmd);
    add_pairs(locus_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "all 21 pairings of 4 lines");
    add_scene(catalog_cmd);
    catalog_cmd->add_flag("--oracle", with_oracle, "verify each entry by scan");

    auto* realize_cmd =
        app.add_subcommand("realize", "cone pair realizing a prescribed hyperbola");
    realize_cmd
        ->add_option("--conic", conic_coeffs,
                     "q11 q12 q22 l1 l2 k0 of q11 x^2 + 2 q12 xy + q22 y^2 "
                     "+ l1 x + l2 y + k0 = 0")
        ->expected(6)
        ->required();
    realize_cmd->add_option("--u", u_param, "parameter u on the constraint curve")
        ->required();

    auto* rect_cmd = app.add_subcommand("rect-at", "inscribed rectangle at a point");
    add_scene(rect_cmd);
    add_pairs(rect_cmd);
    rect_cmd->add_option("--point", point_arg, "center, as x,y")->required();
    auto* angle_opt =
        rect_cmd->add_option("--angle", angle, "chord angle for parallel pairs");

    auto* check_cmd = app.add_subcommand("check", "verify the locus by scanning");
    add_scene(check_cmd);
    add_pairs(check_cmd);
    check_cmd->add_option("--tol", tol, "oracle tolerance");
    double perturb = 0.0;
    check_cmd->add_option("--perturb", perturb,
                          "shift the claimed locus in x before verifying "
                          "(negative control)");

    auto* render_cmd = app.add_subcommand("render", "draw the scene as SVG");
    add_scene(render_cmd);
    render_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    have_angle = angle_opt->count() > 0;

    if (locus_cmd->parsed()) {
        const Scene scene = load_scene(scene_path);
        print_json(to_json(scene_locus(scene, pair1, pair2)));
        return 0;
    }
    if (catalog_cmd->parsed()) {
        const Scene scene = load_scene(scene_path);
        json out = json::array();
        for (const auto& e : catalog_loci(scene_line_set4(scene), with_oracle))
            out.push_back(to_json(e));
        print_json(out);
        return 0;
    }
    if (realize_cmd->parsed()) {
        const ConicCoeffs c{{conic_coeffs[0], conic_coeffs[1], conic_coeffs[2]},
                            {conic_coeffs[3], conic_coeffs[4]},
                            conic_coeffs[5]};
        print_json(to_json(realize(c, u_param)));
        return 0;
    }
    if (rect_cmd->parsed()) {
        const Scene scene = load_scene(scene_path);
        const LinePair p1 = scene.pair_for(pair1);
        const LinePair p2 = scene.pair_for(pair2);
        const Point2 p = parse_point_arg(point_arg);
        const auto fam = have_angle ? std::optional<double>(angle) : std::nullopt;
        print_json(to_json(rectangle_at(p1, p2, p, fam)));
        return 0;
    }
    if (check_cmd->parsed()) {
        const Scene scene = load_scene(scene_path);
        const LinePair p1 = scene.pair_for(pair1);
        const LinePair p2 = scene.pair_for(pair2);
        LocusClass claimed = scene_locus(scene, pair1, pair2);
        if (perturb != 0.0) {
            const RigidMotion shift = RigidMotion::translation_by({perturb, 0.0});
            std::visit(
                [&](auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, SinglePoint>) {
                        v.p = shift.apply(v.p);
                    } else if constexpr (std::is_same_v<T, WholeLine>) {
                        v.line = apply_motion(shift, v.line);
                    } else if constexpr (std::is_same_v<T, LineMinusOpenSegment>) {
                        v.line = apply_motion(shift, v.line);
                        v.q1 = shift.apply(v.q1);
                        v.q2 = shift.apply(v.q2);
                    } else if constexpr (std::is_same_v<T, DegenerateHyperbola>) {
                        v.l1 = apply_motion(shift, v.l1);
                        v.l2 = apply_motion(shift, v.l2);
                        v.center = shift.apply(v.center);
                    } else if constexpr (std::is_same_v<T, Hyperbola>) {
                        v.center = shift.apply(v.center);
                    }
                },
                claimed);
        }
        const OracleReport report = verify_locus(p1, p2, claimed, scene.window, tol);
        json out = to_json(report);
        out["claimed"] = to_json(claimed);
        print_json(out);
        return report.pass ? 0 : 1;
    }
    if (render_cmd->parsed()) {
        const Scene scene = load_scene(scene_path);
        std::vector<std::pair<std::string, LocusClass>> loci;
        for (const auto& tag : scene.pairings) {
            const auto bar = tag.find('|');
            if (bar == std::string::npos) {
                loci.emplace_back(tag, single_pair_locus(scene.pair_for(tag)));
            } else {
                loci.emplace_back(tag, scene_locus(scene, tag.substr(0, bar),
                                                   tag.substr(bar + 1)));
            }
        }
        const std::string svg = render_svg(scene, loci);
        if (out_path.empty()) {
            std::cout << svg;
        } else {
            std::ofstream out(out_path);
            if (!out)
                throw SceneError("cannot write '" + out_path + "'");
            out << svg;
        }
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GeomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
