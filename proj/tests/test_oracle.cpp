#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rectloci/oracle.hpp"

using namespace rectloci;

namespace {
const double pi = std::acos(-1.0);

std::mt19937 rng(20260826);
double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Line through(Point2 p, double angle) {
    return Line::from_point_direction(p, {std::cos(angle), std::sin(angle)});
}

LinePair pair_at(Point2 c, double a1, double a2) {
    return make_line_pair(through(c, a1), through(c, a2));
}

LinePair horizontal_pair(double y1, double y2) {
    return make_line_pair(Line::from_points({0, y1}, {1, y1}),
                          Line::from_points({0, y2}, {1, y2}));
}

const ScanWindow win = make_window({-10, -10}, {10, 10}, 400);
} // namespace

TEST_CASE("window validation") {
    CHECK_THROWS_AS(make_window({0, 0}, {0, 1}, 10), GeomError);
    CHECK_THROWS_AS(make_window({0, 0}, {1, 1}, 1), GeomError);
    CHECK(win.contains({0, 0}));
    CHECK_FALSE(win.contains({11, 0}));
}

TEST_CASE("scan finds the reference hyperbola without the formula") {
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const double a = std::atan(std::sqrt(2.0));
    const LinePair p2 = pair_at({0, 0}, a, -a);
    const auto zeros = scan_zero_set(p1, p2, win);
    CHECK(zeros.size() > 100);
    // Every scan point satisfies (x+1)^2 - y^2/2 = 2.
    for (Point2 p : zeros) {
        const double f = (p.x + 1.0) * (p.x + 1.0) - p.y * p.y / 2.0 - 2.0;
        CHECK(std::abs(f) < 1e-6);
    }
}

TEST_CASE("verify_locus accepts the true locus and rejects a corrupted one") {
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const double a = std::atan(std::sqrt(2.0));
    const LinePair p2 = pair_at({0, 0}, a, -a);
    const LocusClass truth = compute_locus(p1, p2);
    REQUIRE(std::holds_alternative<Hyperbola>(truth));

    const OracleReport good = verify_locus(p1, p2, truth, win, 1e-6);
    CHECK(good.pass);

    Hyperbola bad = std::get<Hyperbola>(truth);
    bad.center.x += 0.5;
    const OracleReport report = verify_locus(p1, p2, LocusClass{bad}, win, 1e-6);
    CHECK_FALSE(report.pass);

    Hyperbola wrong_k = std::get<Hyperbola>(truth);
    wrong_k.k *= 2.0;
    CHECK_FALSE(verify_locus(p1, p2, LocusClass{wrong_k}, win, 1e-6).pass);
}

TEST_CASE("verify_locus across the locus kinds") {
    SUBCASE("single point") {
        const LinePair a = horizontal_pair(-1, 1);
        const LinePair b = make_line_pair(Line::from_points({-2, 0}, {-2, 1}),
                                          Line::from_points({4, 0}, {4, 1}));
        const LocusClass l = compute_locus(a, b);
        REQUIRE(std::holds_alternative<SinglePoint>(l));
        CHECK(verify_locus(a, b, l, win, 1e-6).pass);
    }
    SUBCASE("empty set") {
        const LinePair a = horizontal_pair(-1, 1);
        const LinePair b = horizontal_pair(2, 4);
        const LocusClass l = compute_locus(a, b);
        REQUIRE(std::holds_alternative<EmptySet>(l));
        CHECK(verify_locus(a, b, l, win, 1e-6).pass);
    }
    SUBCASE("whole line") {
        const LinePair a = pair_at({0, 0}, pi / 4, -pi / 4);
        const LinePair b = pair_at({3, 0}, pi / 4, -pi / 4);
        const LocusClass l = compute_locus(a, b);
        REQUIRE(std::holds_alternative<WholeLine>(l));
        CHECK(verify_locus(a, b, l, win, 1e-6).pass);
    }
    SUBCASE("line minus open segment") {
        const LinePair a = horizontal_pair(-1, 1);
        const LinePair b = pair_at({0, 0}, pi / 4, -pi / 4);
        const LocusClass l = compute_locus(a, b);
        REQUIRE(std::holds_alternative<LineMinusOpenSegment>(l));
        CHECK(verify_locus(a, b, l, win, 1e-6).pass);
        // Forgetting the gap must fail: claim the whole midline instead.
        const LocusClass lied = WholeLine{std::get<LineMinusOpenSegment>(l).line};
        CHECK_FALSE(verify_locus(a, b, lied, win, 1e-6).pass);
    }
    SUBCASE("degenerate hyperbola") {
        const auto g = [](const SymMat2& m) {
            return generating_lines(GeneratedSurface{make_hr_cone(m, Point2{0, 0})}).pair;
        };
        const LinePair p1 = g({5.0 / 8.0, 0.5, 2.0});
        const LinePair p2 = g({13.0 / 8.0, 1.5, 2.0});
        const LocusClass l = compute_locus(p1, p2);
        REQUIRE(std::holds_alternative<DegenerateHyperbola>(l));
        CHECK(verify_locus(p1, p2, l, win, 1e-6).pass);
    }
    SUBCASE("full plane") {
        const LinePair a = pair_at({1, 2}, 0.3, 0.3 + pi / 2);
        const LocusClass l = compute_locus(a, a);
        REQUIRE(std::holds_alternative<FullPlane>(l));
        CHECK(verify_locus(a, a, l, win, 1e-6).pass);
    }
}

TEST_CASE("distance_to_locus basics") {
    CHECK(distance_to_locus(SinglePoint{{1, 1}}, {4, 5}) == doctest::Approx(5.0));
    CHECK(distance_to_locus(FullPlane{}, {4, 5}) == 0.0);
    CHECK(std::isinf(distance_to_locus(EmptySet{}, {0, 0})));
    const Line l = Line::from_points({0, 2}, {1, 2});
    CHECK(distance_to_locus(WholeLine{l}, {3, 5}) == doctest::Approx(3.0));
    const LineMinusOpenSegment s{l, {-1, 2}, {1, 2}};
    CHECK(distance_to_locus(LocusClass{s}, {0, 2}) == doctest::Approx(1.0));
    CHECK(distance_to_locus(LocusClass{s}, {5, 2}) == doctest::Approx(0.0));
}

TEST_CASE("sample_locus points lie on the locus") {
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const double a = std::atan(std::sqrt(2.0));
    const LinePair p2 = pair_at({0, 0}, a, -a);
    const LocusClass l = compute_locus(p1, p2);
    const auto pts = sample_locus(l, win, 100);
    CHECK(pts.size() > 50);
    for (Point2 p : pts) {
        CHECK(win.contains(p));
        CHECK(std::abs(membership_residual(p1, p2, p)) < 1e-7 * (1.0 + p.norm_sq()));
    }
}

TEST_CASE("brute search confirms centers and rejects non-centers") {
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const double a = std::atan(std::sqrt(2.0));
    const LinePair p2 = pair_at({0, 0}, a, -a);
    const std::array<Line, 4> lines{p1.l1, p1.l2, p2.l1, p2.l2};
    for (const Point2 p : {Point2{1, 2}, Point2{2, std::sqrt(14.0)},
                           Point2{3, std::sqrt(28.0)}}) {
        const auto r = brute_rectangle_search(lines, p);
        CHECK(r.residual < 1e-9);
        CHECK((r.rect.center - p).norm() < 1e-12);
    }
    CHECK(brute_rectangle_search(lines, {0.0, 0.5}).residual > 1e-3);
}

TEST_CASE("brute search with a parallel-pair degree of freedom") {
    const LinePair par = horizontal_pair(-1, 1);
    const LinePair ip = pair_at({0, 0}, pi / 4, -pi / 4);
    const std::array<Line, 4> lines{par.l1, par.l2, ip.l1, ip.l2};
    // (2, 0) is on the locus: the free chord can stretch to halflength 2.
    CHECK(brute_rectangle_search(lines, {2, 0}).residual < 1e-9);
    // (0.5, 0) is inside the gap: every chord is too long.
    CHECK(brute_rectangle_search(lines, {0.5, 0}).residual > 1e-3);
}

TEST_CASE("brute search honors a non-euclidean metric") {
    // Lines y = +-x, center (t, 0): Euclidean halflengths match for the
    // orthogonal pair through the origin at any point of the plane, but under
    // M = diag(4, 1) the diagonals differ off the axes.
    const LinePair p1 = pair_at({0, 0}, pi / 4, -pi / 4);
    const LinePair p2 = pair_at({0, 0}, 0.0, pi / 2);
    const std::array<Line, 4> lines{p1.l1, p1.l2, p2.l1, p2.l2};
    const SymMat2 M = SymMat2::diag(4.0, 1.0);
    const auto euclid = brute_rectangle_search(lines, {2, 1});
    CHECK(euclid.residual < 1e-9);
    const auto skewed = brute_rectangle_search(lines, {2, 1}, M);
    CHECK(skewed.residual > 1e-3);
}

TEST_CASE("random hyperbola claims verify at tolerance") {
    int checked = 0;
    for (int i = 0; i < 15; ++i) {
        const double a_p1 = uni(0, pi);
        const LinePair p1 = pair_at({uni(-2, 2), uni(-2, 2)}, a_p1,
                                    std::fmod(a_p1 + uni(0.4, pi - 0.4), pi));
        const double a_p2 = uni(0, pi);
        const LinePair p2 = pair_at({uni(-2, 2), uni(-2, 2)}, a_p2,
                                    std::fmod(a_p2 + uni(0.4, pi - 0.4), pi));
        const LocusClass l = compute_locus(p1, p2);
        if (!std::holds_alternative<Hyperbola>(l)) continue;
        CHECK(verify_locus(p1, p2, l, win, 1e-6).pass);
        ++checked;
    }
    CHECK(checked > 5);
}
