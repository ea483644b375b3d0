#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rectloci/scene.hpp"

using namespace rectloci;
using nlohmann::json;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {
std::string fixture(const char* name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("parse both line forms") {
    const json j = {
        {"lines",
         {{{"label", "A"}, {"normal", {0, 2}}, {"offset", 6}},
          {{"label", "B"}, {"point", {1, 1}}, {"direction", {1, 1}}}}},
    };
    const Scene s = parse_scene(j);
    REQUIRE(s.lines.size() == 2);
    CHECK(s.by_label("A").contains({5, 3}));
    CHECK(s.by_label("B").contains({2, 2}));
    CHECK_THROWS_AS(s.by_label("Z"), SceneError);
}

TEST_CASE("validation failures carry field names") {
    auto expect_error = [](const json& j, const char* needle) {
        try {
            parse_scene(j);
            FAIL("expected SceneError");
        } catch (const SceneError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error(json::array(), "object");
    expect_error(json{{"foo", 1}}, "lines");
    expect_error(json{{"lines", {{{"point", {0, 0}}}}}}, "label");
    expect_error(json{{"lines", {{{"label", "A"}, {"normal", {1, 0}}}}}}, "offset");
    expect_error(json{{"lines", {{{"label", "A"}}}}}, "normal");
    expect_error(json{{"lines",
                       {{{"label", "A"}, {"normal", {1, 0}}, {"offset", 0}},
                        {{"label", "A"}, {"normal", {0, 1}}, {"offset", 0}}}}},
                 "duplicate");
    expect_error(json{{"lines", json::array()}, {"metric", {1, 0}}}, "metric");
}

TEST_CASE("pair selector accepts AB and A,B") {
    const Scene s = load_scene(fixture("remark.json"));
    const LinePair p = s.pair_for("AB");
    CHECK_FALSE(p.is_parallel());
    CHECK(p.crossing().x == doctest::Approx(1.0));
    CHECK(p.crossing().y == doctest::Approx(0.0));
    CHECK(s.pair_for("A,B").same_pair(p));
    CHECK_THROWS_AS(s.pair_for("ABC"), SceneError);
    CHECK_THROWS_AS(s.pair_for("AZ"), SceneError);
}

TEST_CASE("fixture files parse and roundtrip losslessly") {
    for (const char* name : {"remark.json", "generic4.json", "square.json"}) {
        const Scene s = load_scene(fixture(name));
        const Scene back = parse_scene(scene_to_json(s));
        REQUIRE(back.lines.size() == s.lines.size());
        for (std::size_t i = 0; i < s.lines.size(); ++i) {
            CHECK(back.lines[i].label == s.lines[i].label);
            CHECK(back.lines[i].line.same_line(s.lines[i].line, 1e-15));
        }
        CHECK(back.pairings == s.pairings);
        CHECK(back.window.resolution == s.window.resolution);
        CHECK((back.window.lo - s.window.lo).norm() == 0.0);
        CHECK(back.markers.size() == s.markers.size());
        // Full fixed point: serializing again gives identical JSON.
        CHECK(scene_to_json(back) == scene_to_json(s));
    }
}

TEST_CASE("broken fixture is rejected") {
    CHECK_THROWS_AS(load_scene(fixture("broken.json")), SceneError);
    CHECK_THROWS_AS(load_scene(fixture("no-such-file.json")), SceneError);
}

TEST_CASE("metric and window parsing") {
    const json j = {{"lines", json::array()},
                    {"metric", {4.0, 0.0, 1.0}},
                    {"window", {{"lo", {-2, -3}}, {"hi", {2, 3}}, {"resolution", 50}}}};
    const Scene s = parse_scene(j);
    REQUIRE(s.metric.has_value());
    CHECK(s.metric->a11 == 4.0);
    CHECK(s.window.resolution == 50);
    CHECK(s.window.lo.y == -3.0);
}

TEST_CASE("locus serialization covers every kind") {
    CHECK(to_json(LocusClass{EmptySet{}})["kind"] == "empty");
    CHECK(to_json(LocusClass{FullPlane{}})["kind"] == "plane");
    const json p = to_json(LocusClass{SinglePoint{{1, 2}}});
    CHECK(p["kind"] == "point");
    CHECK(p["point"][0] == 1.0);
    const Line l = Line::from_points({0, 1}, {1, 1});
    CHECK(to_json(LocusClass{WholeLine{l}})["line"]["offset"] == 1.0);
    const json seg = to_json(LocusClass{LineMinusOpenSegment{l, {-1, 1}, {1, 1}}});
    CHECK(seg["gap"].size() == 2);
    const json d = to_json(LocusClass{DegenerateHyperbola{
        l, Line::from_points({0, 0}, {0, 1}), {0, 1}}});
    CHECK(d["lines"].size() == 2);
    const Hyperbola h{{-1, 0}, {1, 0, -0.5}, 2.0,
                      Line::from_points({0, 0}, {1, 1}),
                      Line::from_points({0, 0}, {1, -1})};
    const json hj = to_json(LocusClass{h});
    CHECK(hj["kind"] == "hyperbola");
    CHECK(hj["center"][0] == -1.0);
    CHECK(hj["C"].size() == 3);
    CHECK(hj["k"] == 2.0);
    CHECK(hj["asymptotes"].size() == 2);
}

TEST_CASE("scene loci roundtrip numerically through JSON") {
    const Scene s = load_scene(fixture("remark.json"));
    const LocusClass l = compute_locus(s.pair_for("AB"), s.pair_for("CD"));
    const auto* h = std::get_if<Hyperbola>(&l);
    REQUIRE(h != nullptr);
    const json j = to_json(l);
    // Doubles survive the JSON dump/parse cycle exactly.
    const json back = json::parse(j.dump());
    CHECK(back["center"][0].get<double>() == h->center.x);
    CHECK(back["k"].get<double>() == h->k);
    CHECK(back["C"][2].get<double>() == h->C.a22);
}
