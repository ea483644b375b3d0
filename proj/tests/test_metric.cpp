#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rectloci/metric.hpp"
#include "rectloci/oracle.hpp"

using namespace rectloci;

namespace {
const double pi = std::acos(-1.0);

std::mt19937 rng(20260828);
double uni(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Line through(Point2 p, double angle) {
    return Line::from_point_direction(p, {std::cos(angle), std::sin(angle)});
}

LinePair pair_at(Point2 c, double a1, double a2) {
    return make_line_pair(through(c, a1), through(c, a2));
}
} // namespace

TEST_CASE("inner product construction") {
    const InnerProduct ip = make_inner_product(SymMat2::diag(4.0, 1.0));
    CHECK(ip.T.a11 == doctest::Approx(2.0));
    CHECK(ip.T.a22 == doctest::Approx(1.0));
    CHECK(ip.T_inv.a11 == doctest::Approx(0.5));
    CHECK_FALSE(ip.is_euclidean());
    CHECK(make_inner_product(SymMat2::identity()).is_euclidean());
    CHECK_THROWS_AS(make_inner_product(SymMat2::diag(1.0, -1.0)),
                    NotPositiveDefinite);
}

TEST_CASE("transformed lines carry transformed points") {
    const InnerProduct ip = make_inner_product({3.0, 1.0, 2.0});
    for (int i = 0; i < 100; ++i) {
        const Line l = through({uni(-3, 3), uni(-3, 3)}, uni(0, pi));
        const Line tl = transform_line(ip, l);
        for (double t : {-2.0, 0.0, 1.3}) {
            const Point2 p = l.foot() + t * l.direction();
            CHECK(tl.contains(ip.T.mul(p), 1e-9));
        }
    }
}

TEST_CASE("transform_pair preserves the pair kind") {
    const InnerProduct ip = make_inner_product(SymMat2::diag(4.0, 1.0));
    const LinePair inter = pair_at({1, 2}, 0.4, 1.5);
    CHECK_FALSE(transform_pair(ip, inter).is_parallel());
    const LinePair par = make_line_pair(Line::from_points({0, -1}, {1, -1}),
                                        Line::from_points({0, 1}, {1, 1}));
    CHECK(transform_pair(ip, par).is_parallel());
    const Point2 x = transform_pair(ip, inter).crossing();
    CHECK((x - ip.T.mul(inter.crossing())).norm() < 1e-9);
}

TEST_CASE("euclidean metric reduces to compute_locus") {
    const InnerProduct ip = make_inner_product(SymMat2::identity());
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const LinePair p2 = pair_at({0, 0}, 0.96, -0.96);
    CHECK(locus_approx_equal(locus_in_metric(ip, p1, p2), compute_locus(p1, p2)));
}

TEST_CASE("metric locus points are exactly the pulled-back euclidean ones") {
    const InnerProduct ip = make_inner_product(SymMat2::diag(4.0, 1.0));
    const LinePair p1 = pair_at({1, 0}, 0.0, pi / 2);
    const double a = std::atan(std::sqrt(2.0));
    const LinePair p2 = pair_at({0, 0}, a, -a);
    const LocusClass metric_locus = locus_in_metric(ip, p1, p2);
    const auto* h = std::get_if<Hyperbola>(&metric_locus);
    REQUIRE(h != nullptr);

    const LocusClass pushed =
        compute_locus(transform_pair(ip, p1), transform_pair(ip, p2));
    const auto* hp = std::get_if<Hyperbola>(&pushed);
    REQUIRE(hp != nullptr);
    const ScanWindow w = make_window({-10, -10}, {10, 10}, 400);
    for (const Point2 q : sample_locus(pushed, w, 60)) {
        const Point2 p = ip.T_inv.mul(q);
        CHECK(std::abs(h->residual(p)) < 1e-8 * (1.0 + p.norm_sq()));
    }
}

TEST_CASE("metric locus centers admit M-rectangles") {
    const SymMat2 M = SymMat2::diag(4.0, 1.0);
    const InnerProduct ip = make_inner_product(M);
    const ScanWindow w = make_window({-10, -10}, {10, 10}, 400);
    int verified = 0;
    for (int i = 0; i < 20; ++i) {
        const double a_p1 = uni(0, pi);
        const LinePair p1 = pair_at({uni(-2, 2), uni(-2, 2)}, a_p1,
                                    std::fmod(a_p1 + uni(0.4, pi - 0.4), pi));
        const double a_p2 = uni(0, pi);
        const LinePair p2 = pair_at({uni(-2, 2), uni(-2, 2)}, a_p2,
                                    std::fmod(a_p2 + uni(0.4, pi - 0.4), pi));
        const LocusClass l = locus_in_metric(ip, p1, p2);
        const std::array<Line, 4> lines{p1.l1, p1.l2, p2.l1, p2.l2};
        int used = 0;
        for (const Point2 p : sample_locus(l, w, 60)) {
            if (used >= 10) break;
            CHECK(brute_rectangle_search(lines, p, M).residual <
                  1e-8 * (1.0 + p.norm_sq()));
            ++used;
        }
        if (used > 0) ++verified;
    }
    CHECK(verified >= 15);
}

TEST_CASE("membership is equivalent across the metric pushforward") {
    const SymMat2 M{2.5, 0.7, 1.5};
    const InnerProduct ip = make_inner_product(M);
    const LinePair p1 = pair_at({1, -1}, 0.3, 1.4);
    const LinePair p2 = pair_at({-1, 2}, 2.1, 0.9);
    const LinePair q1 = transform_pair(ip, p1);
    const LinePair q2 = transform_pair(ip, p2);
    const std::array<Line, 4> lines{p1.l1, p1.l2, p2.l1, p2.l2};
    const std::array<Line, 4> tlines{q1.l1, q1.l2, q2.l1, q2.l2};
    for (int i = 0; i < 40; ++i) {
        const Point2 p{uni(-4, 4), uni(-4, 4)};
        const double rm = brute_rectangle_search(lines, p, M).residual;
        const double re = brute_rectangle_search(tlines, ip.T.mul(p)).residual;
        // Both residuals vanish together (centers map to centers).
        const bool m_center = rm < 1e-8;
        const bool e_center = re < 1e-8;
        CHECK(m_center == e_center);
    }
}
