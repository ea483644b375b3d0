#pragma once

#include <optional>
#include <variant>

#include "rectloci/geom.hpp"

namespace rectloci {

struct ParallelPair : GeomError {
    using GeomError::GeomError;
};
struct BadAngle : GeomError {
    using GeomError::GeomError;
};
struct NonPositiveHeight : GeomError {
    using GeomError::GeomError;
};
struct BadAxes : GeomError {
    using GeomError::GeomError;
};

// Two distinct lines, pre-classified as intersecting or parallel.
struct LinePair {
    struct Intersecting {
        Point2 crossing;
    };
    struct Parallel {
        Line midline;
        double halfgap; // > 0
    };

    Line l1;
    Line l2;
    std::variant<Intersecting, Parallel> kind;

    bool is_parallel() const { return std::holds_alternative<Parallel>(kind); }
    Point2 crossing() const { return std::get<Intersecting>(kind).crossing; }
    const Parallel& parallel() const { return std::get<Parallel>(kind); }

    // Unordered comparison of the canonical lines.
    bool same_pair(const LinePair& o, double tol = eps_geom) const;
};

LinePair make_line_pair(const Line& l1, const Line& l2); // throws on equal lines
LinePair make_line_pair(Point2 a1, Point2 b1, Point2 a2, Point2 b2);

// Elliptical cone z^2 = (x - apex)^T A (x - apex) with det(A) = 1.
struct HRCone {
    SymMat2 A;
    Point2 apex;
};

HRCone make_hr_cone(const SymMat2& a, Point2 apex); // validates SPD, det = 1

// {(x,y,z) : (x,y) on midline, |z| >= halfgap}, generated by a parallel pair.
struct Slab {
    Line midline;
    double halfgap; // > eps_geom
};

using GeneratedSurface = std::variant<HRCone, Slab>;

// Segment with one endpoint on each line of a pair and prescribed midpoint.
struct Chord {
    Point2 p1;
    Point2 p2;
    Point2 midpoint;
    double halflength;
};

Chord midpoint_chord(const LinePair& pair, Point2 p); // throws ParallelPair

GeneratedSurface surface_from_pair(const LinePair& pair);

HRCone cone_from_angles(double phi, double theta, Point2 apex); // theta in (0, pi/2)

struct GeneratingLinesResult {
    LinePair pair; // the unique pair, or the canonical axis-aligned one
    bool orthogonal_family = false; // unit cone: every orthogonal pair works
    std::optional<Point2> family_center;
    bool low_confidence = false; // ||A - I|| in (eps_geom, 1e-6)
};

GeneratingLinesResult generating_lines(const GeneratedSurface& s);

struct HeightResult {
    enum class Kind { value, at_least, undefined } kind;
    double v = 0.0;

    static HeightResult value(double z2) { return {Kind::value, z2}; }
    static HeightResult at_least(double z2) { return {Kind::at_least, z2}; }
    static HeightResult undefined() { return {Kind::undefined, 0.0}; }
};

HeightResult surface_height_sq(const GeneratedSurface& s, Point2 p);

struct Ellipse {
    Point2 center;
    double semi_major;
    double semi_minor;
    double orientation; // angle of the major axis, in [0, pi)
};

Ellipse level_curve(const HRCone& c, double h); // throws NonPositiveHeight

struct ConeThroughEllipse {
    HRCone cone;
    double height; // sqrt(major * minor)
};

ConeThroughEllipse cone_through_ellipse(const Ellipse& e); // throws BadAxes

} // namespace rectloci
