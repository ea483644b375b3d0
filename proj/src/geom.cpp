#include "rectloci/geom.hpp"

#include <algorithm>

namespace rectloci {

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n <= eps_geom)
        throw GeomError("cannot normalize a near-zero vector");
    return *this / n;
}

Point2 make_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw GeomError("non-finite point coordinate");
    return {x, y};
}

namespace {

// Flip (n, c) so the first normal component above eps_geom is positive.
void canonicalize(Vec2& n, double& c) {
    double lead = std::abs(n.x) > eps_geom ? n.x : n.y;
    if (lead < 0.0) {
        n = -n;
        c = -c;
    }
    if (n.x == 0.0) n.x = 0.0; // normalize -0.0
    if (n.y == 0.0) n.y = 0.0;
}

} // namespace

Line Line::from_normal_offset(Vec2 n, double c) {
    const double len = n.norm();
    if (len <= eps_geom)
        throw GeomError("line normal must be nonzero");
    Vec2 u = n / len;
    double off = c / len;
    canonicalize(u, off);
    return Line{u, off};
}

Line Line::from_points(Point2 p, Point2 q) {
    return from_point_direction(p, q - p);
}

Line Line::from_point_direction(Point2 p, Vec2 dir) {
    if (dir.norm() <= eps_geom)
        throw GeomError("line direction must be nonzero");
    const Vec2 n = dir.perp();
    return from_normal_offset(n, n.dot(p));
}

bool Line::same_line(const Line& o, double tol) const {
    return std::abs(normal.x - o.normal.x) <= tol &&
           std::abs(normal.y - o.normal.y) <= tol &&
           std::abs(offset - o.offset) <= tol * std::max(1.0, std::abs(offset));
}

double SymMat2::max_abs() const {
    return std::max({std::abs(a11), std::abs(a12), std::abs(a22)});
}

SymMat2 SymMat2::inverse() const {
    const double d = det();
    if (std::abs(d) <= eps_geom * std::max(1.0, max_abs() * max_abs()))
        throw GeomError("singular SymMat2");
    return {a22 / d, -a12 / d, a11 / d};
}

Vec2 SymMat2::solve(Vec2 rhs) const {
    return inverse().mul(rhs);
}

SymMat2 SymMat2::congruence_by_rotation(double phi) const {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * c * a11 - 2.0 * s * c * a12 + s * s * a22,
            s * c * (a11 - a22) + (c * c - s * s) * a12,
            s * s * a11 + 2.0 * s * c * a12 + c * c * a22};
}

bool approx_equal(const SymMat2& a, const SymMat2& b, double tol) {
    return (a - b).max_abs() <= tol;
}

bool approx_equal(Vec2 a, Vec2 b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

EigSym2 eig_sym2(const SymMat2& a) {
    const double mean = 0.5 * (a.a11 + a.a22);
    const double half_diff = 0.5 * (a.a11 - a.a22);
    const double r = std::hypot(half_diff, a.a12);
    const double l1 = mean + r;
    const double l2 = mean - r;

    double phi = 0.0;
    if (r > eps_geom * std::max(1.0, a.max_abs())) {
        // Eigenvector for l1: pick the better-conditioned row of A - l1 I.
        Vec2 v{a.a12, l1 - a.a11};
        Vec2 w{l1 - a.a22, a.a12};
        if (w.norm_sq() > v.norm_sq()) v = w;
        phi = std::atan2(v.y, v.x);
        if (phi < 0.0) phi += std::acos(-1.0);
        const double pi = std::acos(-1.0);
        if (phi >= pi) phi -= pi;
    }
    return {l1, l2, phi};
}

SymMat2 sqrt_spd(const SymMat2& a) {
    const auto [l1, l2, phi] = eig_sym2(a);
    if (l2 <= eps_geom)
        throw NotPositiveDefinite("sqrt_spd: eigenvalue below tolerance");
    return SymMat2::diag(std::sqrt(l1), std::sqrt(l2)).congruence_by_rotation(phi);
}

Point2 RigidMotion::apply(Point2 p) const {
    return apply_vector(p) + translation;
}

Vec2 RigidMotion::apply_vector(Vec2 v) const {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

RigidMotion RigidMotion::inverse() const {
    RigidMotion inv{-phi, {0, 0}};
    inv.translation = -inv.apply_vector(translation);
    return inv;
}

RigidMotion RigidMotion::then(const RigidMotion& second) const {
    return {phi + second.phi, second.apply_vector(translation) + second.translation};
}

Line apply_motion(const RigidMotion& g, const Line& l) {
    const Vec2 n = g.apply_vector(l.normal);
    return Line::from_normal_offset(n, l.offset + n.dot(g.translation));
}

double ConicCoeffs::max_abs_coeff() const {
    return std::max({Q.max_abs(), std::abs(L.x), std::abs(L.y), std::abs(k0)});
}

ConicCoeffs apply_motion(const RigidMotion& g, const ConicCoeffs& c) {
    // f'(y) = f(g^{-1} y):  Q' = R Q R^T,  L' = R L - 2 Q' t,
    // k0' = t^T Q' t - (R L) . t + k0.
    const SymMat2 Qp = c.Q.congruence_by_rotation(g.phi);
    const Vec2 RL = g.apply_vector(c.L);
    const Vec2 t = g.translation;
    return {Qp, RL - 2.0 * Qp.mul(t), Qp.quad(t) - RL.dot(t) + c.k0};
}

const char* to_string(ConicKind k) {
    switch (k) {
    case ConicKind::ellipse: return "ellipse";
    case ConicKind::parabola: return "parabola";
    case ConicKind::hyperbola: return "hyperbola";
    case ConicKind::degenerate_hyperbola: return "degenerate-hyperbola";
    case ConicKind::parallel_lines: return "parallel-lines";
    case ConicKind::line: return "line";
    case ConicKind::point: return "point";
    case ConicKind::empty: return "empty";
    case ConicKind::plane: return "plane";
    }
    return "?";
}

ConicKind classify_conic(const ConicCoeffs& c, double eps) {
    const double scale = c.max_abs_coeff();
    if (scale == 0.0)
        return ConicKind::plane;
    const double tol = eps * scale;

    const double qscale = c.Q.max_abs();
    if (qscale <= tol) {
        if (c.L.norm() <= tol)
            return std::abs(c.k0) <= tol ? ConicKind::plane : ConicKind::empty;
        return ConicKind::line;
    }

    const double d = c.Q.det();
    const double dtol = eps * scale * scale;

    if (std::abs(d) > dtol) {
        // Central conic: complete the square about the center.
        const Vec2 center = c.Q.solve(c.L * -0.5);
        const double kappa = c.k0 - c.Q.quad(center);
        const double ktol = eps * std::max(scale, std::abs(c.Q.quad(center)));
        if (d > 0.0) {
            const double sgn = c.Q.trace() > 0.0 ? 1.0 : -1.0;
            if (std::abs(kappa) <= ktol) return ConicKind::point;
            return sgn * kappa < 0.0 ? ConicKind::ellipse : ConicKind::empty;
        }
        if (std::abs(kappa) <= ktol) return ConicKind::degenerate_hyperbola;
        return ConicKind::hyperbola;
    }

    // Parabolic family: one eigenvalue is (relatively) zero.
    const auto e = eig_sym2(c.Q);
    const double lambda = std::abs(e.l1) >= std::abs(e.l2) ? e.l1 : e.l2;
    const double axis_phi = std::abs(e.l1) >= std::abs(e.l2)
                                ? e.phi
                                : e.phi + std::acos(-1.0) / 2.0;
    // Rotate L into the eigenframe: u along the nonzero eigendirection.
    const double cph = std::cos(axis_phi), sph = std::sin(axis_phi);
    const double lu = cph * c.L.x + sph * c.L.y;
    const double lv = -sph * c.L.x + cph * c.L.y;
    if (std::abs(lv) > tol)
        return ConicKind::parabola;
    // lambda u^2 + lu u + k0 = 0 in the single variable u.
    const double disc = lu * lu - 4.0 * lambda * c.k0;
    const double disc_tol = eps * scale * scale;
    if (std::abs(disc) <= disc_tol) return ConicKind::line;
    return disc > 0.0 ? ConicKind::parallel_lines : ConicKind::empty;
}

} // namespace rectloci
