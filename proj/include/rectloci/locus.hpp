#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "rectloci/cone.hpp"

namespace rectloci {

struct EqualConeMatrices : GeomError {
    using GeomError::GeomError;
};
struct NotHyperbolic : GeomError {
    using GeomError::GeomError;
};
struct NotOnLocus : GeomError {
    using GeomError::GeomError;
};
struct MissingFamilyParam : GeomError {
    using GeomError::GeomError;
};
struct InvalidFamilyParam : GeomError {
    using GeomError::GeomError;
};

// (x-a)^T A (x-a) - (x-b)^T B (x-b) rewritten about its center:
// (x - center)^T C (x - center) = k with C = A - B, c = A a - B b,
// center = C^{-1} c and k = c^T C^{-1} c - a^T A a + b^T B b.
struct DifferenceForm {
    SymMat2 C;
    Vec2 c;
    double k;
    Point2 center;
};

DifferenceForm difference_form(const HRCone& s1, const HRCone& s2);

std::pair<Line, Line> asymptotes(const DifferenceForm& d); // throws NotHyperbolic

// The seven locus shapes.
struct EmptySet {};
struct SinglePoint {
    Point2 p;
};
struct FullPlane {};
struct WholeLine {
    Line line;
};
struct LineMinusOpenSegment {
    Line line;
    Point2 q1;
    Point2 q2; // open gap between q1 and q2 is excluded
};
struct DegenerateHyperbola {
    Line l1;
    Line l2;
    Point2 center;
};
struct Hyperbola {
    Point2 center;
    SymMat2 C; // det < 0
    double k;  // nonzero; locus is (x-center)^T C (x-center) = k
    Line asym1;
    Line asym2;

    double residual(Point2 p) const { return C.quad(p - center) - k; }
};

using LocusClass = std::variant<EmptySet, SinglePoint, FullPlane, WholeLine,
                                LineMinusOpenSegment, DegenerateHyperbola, Hyperbola>;

const char* locus_kind_name(const LocusClass& l);

bool locus_approx_equal(const LocusClass& a, const LocusClass& b, double tol = 1e-8);

// Full case analysis of the rectangle locus for two pairs of lines.  The
// flag selects the semantics for two identical intersecting non-orthogonal
// pairs, where every inscribed rectangle is degenerate: false keeps only the
// crossing point, true admits the whole plane.
LocusClass compute_locus(const LinePair& p1, const LinePair& p2,
                         bool count_degenerate = false);

// Signed equal-halflength defect; zero (within tolerance) exactly on the
// locus.  Computed from midpoint chords, not from the difference form.
double membership_residual(const LinePair& p1, const LinePair& p2, Point2 p);

struct InscribedRectangle {
    std::array<Point2, 4> vertices; // cyclic order about the center
    Point2 center;
    double diag_halflength;
    // vertices[i] lies on assignment[i].first ? p2 : p1, line index second.
    struct LineRef {
        int pair; // 0 or 1
        int line; // 0 or 1
    };
    std::array<LineRef, 4> assignment;
};

// Reconstruct the inscribed rectangle centered at a locus point.  When a
// pair is parallel its chord is a one-parameter family; family_param is the
// chord angle in radians and is required whenever the chord is not forced.
InscribedRectangle rectangle_at(const LinePair& p1, const LinePair& p2, Point2 p,
                                std::optional<double> family_param = std::nullopt);

} // namespace rectloci
