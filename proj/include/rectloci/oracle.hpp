#pragma once

#include <array>
#include <vector>

#include "rectloci/locus.hpp"

namespace rectloci {

struct ScanWindow {
    Point2 lo;
    Point2 hi;
    int resolution = 400; // samples per axis, >= 2

    bool contains(Point2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
};

ScanWindow make_window(Point2 lo, Point2 hi, int resolution);

// Sign-change points of the equal-halflength residual over the window grid,
// refined by bisection along grid edges.  Built from midpoint chords only;
// none of the cone/difference-form machinery is consulted.
std::vector<Point2> scan_zero_set(const LinePair& p1, const LinePair& p2,
                                  const ScanWindow& w);

struct OracleReport {
    std::vector<Point2> zero_set;
    double max_distance_to_claimed = 0.0; // scan points vs. claimed locus
    double max_claimed_residual = 0.0;    // claimed samples vs. membership
    double distance_tolerance = 0.0;
    double residual_tolerance = 0.0;
    bool pass = false;
};

OracleReport verify_locus(const LinePair& p1, const LinePair& p2,
                          const LocusClass& claimed, const ScanWindow& w,
                          double tol);

// Distance from a point to a locus (hyperbolas use a first-order estimate).
double distance_to_locus(const LocusClass& l, Point2 p);

// Up to n points on the locus inside the window.
std::vector<Point2> sample_locus(const LocusClass& l, const ScanWindow& w, int n);

struct BruteRectangle {
    InscribedRectangle rect;
    double residual; // |diag1^2 - diag2^2| in the M-metric
};

// Direct search for an inscribed rectangle with the given center: diagonal 1
// joins lines[0], lines[1]; diagonal 2 joins lines[2], lines[3].  Lengths
// are measured in the inner product induced by metric.
BruteRectangle brute_rectangle_search(const std::array<Line, 4>& lines, Point2 center,
                                      const SymMat2& metric = SymMat2::identity());

} // namespace rectloci
