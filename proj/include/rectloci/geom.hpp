#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rectloci/constants.hpp"

namespace rectloci {

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPositiveDefinite : GeomError {
    using GeomError::GeomError;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    // z-component of the 3D cross product; sign tests for parallelism.
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
    Vec2 perp() const { return {-y, x}; }

    Vec2 normalized() const;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Points and vectors share a representation; the distinction is kept in
// signatures only.
using Point2 = Vec2;

Point2 make_point(double x, double y); // rejects NaN/infinity

// Normalized implicit line {p : normal . p = offset}.  Canonical sign: the
// first normal component exceeding eps_geom in magnitude is positive, so
// equal geometric lines compare equal componentwise.
struct Line {
    Vec2 normal;   // unit length
    double offset; // signed distance of the line from the origin

    static Line from_normal_offset(Vec2 n, double c);
    static Line from_points(Point2 p, Point2 q);
    static Line from_point_direction(Point2 p, Vec2 dir);

    Vec2 direction() const { return normal.perp(); }
    double signed_distance(Point2 p) const { return normal.dot(p) - offset; }
    bool contains(Point2 p, double tol = eps_geom) const {
        return std::abs(signed_distance(p)) <= tol;
    }
    Point2 foot() const { return normal * offset; } // closest point to origin
    Point2 project(Point2 p) const { return p - normal * signed_distance(p); }

    bool same_line(const Line& o, double tol = eps_geom) const;
};

// Symmetric 2x2 matrix; symmetry is structural (three stored entries).
struct SymMat2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    SymMat2() = default;
    SymMat2(double m11, double m12, double m22) : a11(m11), a12(m12), a22(m22) {}

    static SymMat2 identity() { return {1.0, 0.0, 1.0}; }
    static SymMat2 diag(double d1, double d2) { return {d1, 0.0, d2}; }

    double det() const { return a11 * a22 - a12 * a12; }
    double trace() const { return a11 + a22; }
    double max_abs() const;

    Vec2 mul(Vec2 v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
    double quad(Vec2 v) const { return v.dot(mul(v)); } // v^T A v

    SymMat2 operator+(const SymMat2& o) const { return {a11 + o.a11, a12 + o.a12, a22 + o.a22}; }
    SymMat2 operator-(const SymMat2& o) const { return {a11 - o.a11, a12 - o.a12, a22 - o.a22}; }
    SymMat2 operator*(double s) const { return {a11 * s, a12 * s, a22 * s}; }

    SymMat2 inverse() const; // throws GeomError when singular
    Vec2 solve(Vec2 rhs) const;

    // Congruence R^T A R for an arbitrary 2x2 matrix R given columnwise;
    // used for rotations and metric transforms, result stays symmetric.
    SymMat2 congruence_by_rotation(double phi) const; // R_phi A R_{-phi}
};

bool approx_equal(const SymMat2& a, const SymMat2& b, double tol = eps_geom);
bool approx_equal(Vec2 a, Vec2 b, double tol = eps_geom);

// Spectral decomposition A = R_phi diag(l1, l2) R_{-phi} with l1 >= l2 and
// phi in [0, pi).  Scalar matrices return phi = 0.
struct EigSym2 {
    double l1;
    double l2;
    double phi;
};
EigSym2 eig_sym2(const SymMat2& a);

SymMat2 sqrt_spd(const SymMat2& a); // throws NotPositiveDefinite

// Counterclockwise rotation by phi followed by translation.
struct RigidMotion {
    double phi = 0.0;
    Vec2 translation;

    static RigidMotion identity() { return {}; }
    static RigidMotion rotation(double phi) { return {phi, {0, 0}}; }
    static RigidMotion translation_by(Vec2 t) { return {0.0, t}; }

    Point2 apply(Point2 p) const;
    Vec2 apply_vector(Vec2 v) const; // rotation only
    RigidMotion inverse() const;
    RigidMotion then(const RigidMotion& second) const; // second * this
};

Line apply_motion(const RigidMotion& g, const Line& l);

// General conic {x : x^T Q x + L . x + k0 = 0}.
struct ConicCoeffs {
    SymMat2 Q;
    Vec2 L;
    double k0 = 0.0;

    double eval(Point2 p) const { return Q.quad(p) + L.dot(p) + k0; }
    double max_abs_coeff() const;
};

ConicCoeffs apply_motion(const RigidMotion& g, const ConicCoeffs& c);

enum class ConicKind {
    ellipse,
    parabola,
    hyperbola,
    degenerate_hyperbola, // two crossing lines
    parallel_lines,       // two distinct parallel lines
    line,
    point,
    empty,
    plane,
};

const char* to_string(ConicKind k);

// Determinant-criterion classification; |.| <= eps * scale is treated as
// zero, scale = max absolute coefficient.
ConicKind classify_conic(const ConicCoeffs& c, double eps = eps_geom);

} // namespace rectloci
