#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rectloci/render.hpp"

using namespace rectloci;

namespace {
std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

Scene remark_scene() {
    Scene s;
    const double r2 = std::sqrt(2.0);
    s.lines.push_back({"A", Line::from_normal_offset({1, 0}, 1), {}});
    s.lines.push_back({"B", Line::from_normal_offset({0, 1}, 0), {}});
    s.lines.push_back({"C", Line::from_point_direction({0, 0}, {1, r2}), {}});
    s.lines.push_back({"D", Line::from_point_direction({0, 0}, {1, -r2}), {}});
    s.markers = {{1, 2},
                 {2, std::sqrt(14.0)},
                 {3, std::sqrt(28.0)},
                 {4, std::sqrt(46.0)}};
    return s;
}
} // namespace

TEST_CASE("svg document shape") {
    Scene s = remark_scene();
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    const std::string svg = render_svg(s, {{"AB|CD", l}});
    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // Two hyperbola branches, four scene lines, four markers, a legend entry.
    CHECK(count_of(svg, "<path ") == 2);
    CHECK(count_of(svg, "<line ") >= 4);
    CHECK(count_of(svg, "<circle ") == 4);
    CHECK(svg.find("AB|CD: hyperbola") != std::string::npos);
}

TEST_CASE("rendering is byte-stable") {
    Scene s = remark_scene();
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    const InscribedRectangle r = rectangle_at(s.pair_for("AB"), s.pair_for("CD"),
                                              {1, 2});
    CHECK(render_svg(s, {{"AB|CD", l}}, {r}) == render_svg(s, {{"AB|CD", l}}, {r}));
    CHECK(render_svg(s, {{"AB|CD", l}}, {r}).find("<polygon ") != std::string::npos);
}

TEST_CASE("empty locus draws lines only with a legend entry") {
    Scene s;
    s.lines.push_back({"A", Line::from_normal_offset({0, 1}, -1), {}});
    s.lines.push_back({"B", Line::from_normal_offset({0, 1}, 1), {}});
    s.lines.push_back({"C", Line::from_normal_offset({0, 1}, 2), {}});
    s.lines.push_back({"D", Line::from_normal_offset({0, 1}, 4), {}});
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    REQUIRE(std::holds_alternative<EmptySet>(l));
    const std::string svg = render_svg(s, {{"AB|CD", l}});
    CHECK(svg.find("empty locus") != std::string::npos);
    CHECK(count_of(svg, "<path ") == 0);
    CHECK(count_of(svg, "<line ") == 4);
}

TEST_CASE("gap segments are dashed") {
    Scene s;
    s.lines.push_back({"A", Line::from_normal_offset({0, 1}, -1), {}});
    s.lines.push_back({"B", Line::from_normal_offset({0, 1}, 1), {}});
    s.lines.push_back({"C", Line::from_point_direction({0, 0}, {1, 1}), {}});
    s.lines.push_back({"D", Line::from_point_direction({0, 0}, {1, -1}), {}});
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    REQUIRE(std::holds_alternative<LineMinusOpenSegment>(l));
    const std::string svg = render_svg(s, {{"AB|CD", l}});
    CHECK(svg.find("stroke-dasharray=\"6,4\"") != std::string::npos);
}

TEST_CASE("catalog render emits one panel per entry") {
    Scene s;
    s.lines.push_back({"A", Line::from_point_direction({0, 0}, {1, 0.3}), {}});
    s.lines.push_back({"B", Line::from_point_direction({1, 2}, {1, -1.2}), {}});
    s.lines.push_back({"C", Line::from_point_direction({-2, 1}, {0.3, 1}), {}});
    s.lines.push_back({"D", Line::from_point_direction({3, -1}, {1, 2.5}), {}});
    const LineSet4 set{{s.lines[0].line, s.lines[1].line, s.lines[2].line,
                        s.lines[3].line}};
    const auto entries = catalog_loci(set);
    REQUIRE(entries.size() == 21);
    const std::string svg = render_catalog_svg(s, entries);
    // One background rect per panel plus the hyperbola branches and lines.
    CHECK(count_of(svg, "fill=\"white\"") == 21);
    CHECK(count_of(svg, "<path ") == 6); // 3 hyperbolas, two branches each
    CHECK(count_of(svg, "</svg>") == 1);
}

TEST_CASE("style knobs are honored") {
    Scene s = remark_scene();
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    RenderStyle style;
    style.samples_per_branch = 2;
    const std::string coarse = render_svg(s, {{"AB|CD", l}}, {}, style);
    style.samples_per_branch = 64;
    const std::string fine = render_svg(s, {{"AB|CD", l}}, {}, style);
    CHECK(coarse.size() < fine.size());
}
