#include "rectloci/cone.hpp"

#include <algorithm>
#include <cmath>

namespace rectloci {

namespace {
const double pi = std::acos(-1.0);

double wrap_axis_angle(double phi) {
    phi = std::fmod(phi, pi);
    if (phi < 0.0) phi += pi;
    return phi;
}
} // namespace

bool LinePair::same_pair(const LinePair& o, double tol) const {
    return (l1.same_line(o.l1, tol) && l2.same_line(o.l2, tol)) ||
           (l1.same_line(o.l2, tol) && l2.same_line(o.l1, tol));
}

LinePair make_line_pair(const Line& l1, const Line& l2) {
    if (l1.same_line(l2))
        throw GeomError("line pair requires distinct lines");
    const double cr = l1.normal.cross(l2.normal);
    if (std::abs(cr) <= eps_geom) {
        // Parallel: align the second offset with the first normal's sign.
        const double c2 = l1.normal.dot(l2.normal) >= 0.0 ? l2.offset : -l2.offset;
        const Line mid = Line::from_normal_offset(l1.normal, 0.5 * (l1.offset + c2));
        return {l1, l2, LinePair::Parallel{mid, 0.5 * std::abs(l1.offset - c2)}};
    }
    // n1 . p = c1, n2 . p = c2 by Cramer's rule.
    const Point2 crossing{(l1.offset * l2.normal.y - l2.offset * l1.normal.y) / cr,
                          (l2.offset * l1.normal.x - l1.offset * l2.normal.x) / cr};
    return {l1, l2, LinePair::Intersecting{crossing}};
}

LinePair make_line_pair(Point2 a1, Point2 b1, Point2 a2, Point2 b2) {
    return make_line_pair(Line::from_points(a1, b1), Line::from_points(a2, b2));
}

HRCone make_hr_cone(const SymMat2& a, Point2 apex) {
    const auto e = eig_sym2(a);
    if (e.l2 <= eps_geom)
        throw NotPositiveDefinite("cone matrix must be positive definite");
    if (std::abs(a.det() - 1.0) > 1e-7)
        throw GeomError("cone matrix must have determinant 1");
    return {a, apex};
}

Chord midpoint_chord(const LinePair& pair, Point2 p) {
    if (pair.is_parallel())
        throw ParallelPair("midpoint chord is not unique for a parallel pair");
    // Endpoints a_i + t_i d_i with sum equal to 2p; the direction parameters
    // solve t d1 + s d2 = 2p - a1 - a2.
    const Vec2 d1 = pair.l1.direction();
    const Vec2 d2 = pair.l2.direction();
    const Point2 a1 = pair.l1.foot();
    const Point2 a2 = pair.l2.foot();
    const Vec2 rhs = 2.0 * p - a1 - a2;
    const double det = d1.cross(d2); // nonzero: lines are not parallel
    const double t = rhs.cross(d2) / det;
    const double s = d1.cross(rhs) / det;
    const Point2 p1 = a1 + t * d1;
    const Point2 p2 = a2 + s * d2;
    return {p1, p2, 0.5 * (p1 + p2), 0.5 * (p1 - p2).norm()};
}

HRCone cone_from_angles(double phi, double theta, Point2 apex) {
    if (!(theta > 0.0 && theta < pi / 2.0))
        throw BadAngle("theta must lie in (0, pi/2)");
    const double t = std::tan(theta);
    const SymMat2 a = SymMat2::diag(t * t, 1.0 / (t * t)).congruence_by_rotation(phi);
    return {a, apex};
}

GeneratedSurface surface_from_pair(const LinePair& pair) {
    if (pair.is_parallel()) {
        const auto& par = pair.parallel();
        return Slab{par.midline, par.halfgap};
    }
    Vec2 u1 = pair.l1.direction();
    Vec2 u2 = pair.l2.direction();
    if (u1.dot(u2) < 0.0) u2 = -u2; // take the smaller angle between the lines
    // atan2 keeps full precision for nearly parallel lines where acos of the
    // dot product would round to zero.
    const double theta = 0.5 * std::atan2(std::abs(u1.cross(u2)), u1.dot(u2)); // (0, pi/4]
    const Vec2 bis = (u1 + u2).normalized(); // dot >= 0, so the sum is nonzero
    const double phi = std::atan2(bis.y, bis.x);
    return cone_from_angles(phi, theta, pair.crossing());
}

GeneratingLinesResult generating_lines(const GeneratedSurface& s) {
    if (const auto* slab = std::get_if<Slab>(&s)) {
        const Line& m = slab->midline;
        const Line a = Line::from_normal_offset(m.normal, m.offset + slab->halfgap);
        const Line b = Line::from_normal_offset(m.normal, m.offset - slab->halfgap);
        return {make_line_pair(a, b), false, std::nullopt, false};
    }
    const HRCone& cone = std::get<HRCone>(s);
    const SymMat2 m = cone.A - SymMat2::identity();
    const double dev = m.max_abs();
    if (dev <= unit_cone_eps) {
        const Line v = Line::from_normal_offset({1, 0}, cone.apex.x);
        const Line h = Line::from_normal_offset({0, 1}, cone.apex.y);
        return {make_line_pair(v, h), true, cone.apex, false};
    }
    // Factor (x - a)^T (A - I) (x - a) = 0 in the eigenframe of A - I:
    // mu1 u^2 + mu2 v^2 = 0 with mu1 > 0 > mu2 gives v = +-sqrt(mu1/-mu2) u.
    const auto e = eig_sym2(m);
    const double slope = std::sqrt(e.l1 / -e.l2);
    const RigidMotion rot = RigidMotion::rotation(e.phi);
    const Vec2 d1 = rot.apply_vector({1.0, slope});
    const Vec2 d2 = rot.apply_vector({1.0, -slope});
    GeneratingLinesResult res{make_line_pair(Line::from_point_direction(cone.apex, d1),
                                             Line::from_point_direction(cone.apex, d2)),
                              false, std::nullopt, false};
    res.low_confidence = dev < near_unit_cone_eps;
    return res;
}

HeightResult surface_height_sq(const GeneratedSurface& s, Point2 p) {
    if (const auto* cone = std::get_if<HRCone>(&s))
        return HeightResult::value(cone->A.quad(p - cone->apex));
    const Slab& slab = std::get<Slab>(s);
    if (slab.midline.contains(p))
        return HeightResult::at_least(slab.halfgap * slab.halfgap);
    return HeightResult::undefined();
}

Ellipse level_curve(const HRCone& c, double h) {
    if (!(h > 0.0))
        throw NonPositiveHeight("level curve height must be positive");
    const auto e = eig_sym2(c.A); // l1 >= l2 > 0
    // Semiaxis along an eigendirection with eigenvalue l is h/sqrt(l); the
    // major axis belongs to the smaller eigenvalue.
    return {c.apex, h / std::sqrt(e.l2), h / std::sqrt(e.l1),
            wrap_axis_angle(e.phi + pi / 2.0)};
}

ConeThroughEllipse cone_through_ellipse(const Ellipse& e) {
    if (!(e.semi_minor > 0.0) || e.semi_major < e.semi_minor)
        throw BadAxes("require semi_major >= semi_minor > 0");
    const double M = e.semi_major, m = e.semi_minor;
    const SymMat2 a = SymMat2::diag(m / M, M / m).congruence_by_rotation(e.orientation);
    return {HRCone{a, e.center}, std::sqrt(M * m)};
}

} // namespace rectloci
