#include "rectloci/realization.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rectloci {

namespace {

// Minimal general 2x2 helper for the non-symmetric intermediate products.
struct Mat2 {
    double m11, m12, m21, m22;

    static Mat2 from_sym(const SymMat2& s) { return {s.a11, s.a12, s.a12, s.a22}; }

    Mat2 mul(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    SymMat2 symmetrized() const { return {m11, 0.5 * (m12 + m21), m22}; }
};

// N = C A^{-1} B; symmetric whenever A - B = C.
SymMat2 second_constraint_matrix(const SymMat2& C, const SymMat2& A, const SymMat2& B) {
    return Mat2::from_sym(C)
        .mul(Mat2::from_sym(A.inverse()))
        .mul(Mat2::from_sym(B))
        .symmetrized();
}

double condition_number(const SymMat2& m) {
    const auto e = eig_sym2(m);
    return std::abs(e.l1) / std::abs(e.l2);
}

void require_hyperbola_eigs(double l1, double l2) {
    if (!(l1 > 0.0 && l2 < 0.0))
        throw NotAHyperbola("normalized eigenvalues must satisfy l1 > 0 > l2");
}

} // namespace

HyperbolaSpec hyperbola_spec(const ConicCoeffs& c) {
    if (classify_conic(c) != ConicKind::hyperbola)
        throw NotAHyperbola("conic is not a (nondegenerate) hyperbola");
    const Point2 center = c.Q.solve(c.L * -0.5);
    const double kappa = c.k0 - c.Q.quad(center);
    // (x - center)^T Q (x - center) = -kappa; rescale the right side to 1.
    return {center, c.Q * (1.0 / -kappa)};
}

NormalizedHyperbola normalize_hyperbola(const ConicCoeffs& c) {
    const HyperbolaSpec spec = hyperbola_spec(c);
    const auto e = eig_sym2(spec.C); // l1 > 0 > l2 since det < 0
    require_hyperbola_eigs(e.l1, e.l2);
    // x -> R_{-phi} (x - center) maps the hyperbola onto x^T diag(l1,l2) x = 1.
    const RigidMotion g =
        RigidMotion::translation_by(-spec.center).then(RigidMotion::rotation(-e.phi));
    return {g, e.l1, e.l2};
}

AdmissibleU admissible_u(double l1, double l2) {
    require_hyperbola_eigs(l1, l2);
    // v^2 = (-l2/l1) u^2 + (-l2) u - 1 >= 0: upward parabola, positive root.
    const double a = -l2 / l1;
    const double b = -l2;
    const double disc = b * b + 4.0 * a;
    const double root = (-b + std::sqrt(disc)) / (2.0 * a);
    return {std::max(root, std::max(0.0, -l1)),
            std::numeric_limits<double>::infinity()};
}

RealizationParams params_on_constraint(double l1, double l2, double u, int sign) {
    require_hyperbola_eigs(l1, l2);
    const double v_sq = -1.0 - (l2 / l1) * u * u - l2 * u;
    if (!(u > std::max(0.0, -l1)) || v_sq < -eps_geom) {
        const AdmissibleU adm = admissible_u(l1, l2);
        std::ostringstream msg;
        msg << "u = " << u << " outside the admissible interval [" << adm.lo << ", inf)";
        throw OutOfRange(msg.str());
    }
    const double v = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, v_sq));
    return {u, v, 0.0, 0.0};
}

ConePairRealization build_cone_pair(double l1, double l2,
                                    const RealizationParams& params) {
    require_hyperbola_eigs(l1, l2);
    const double u = params.u, v = params.v;
    if (!(u > std::max(0.0, -l1)))
        throw ConstraintViolated("u must exceed max(0, -l1)");
    const double f = v * v + (l2 / l1) * u * u + l2 * u + 1.0;
    if (std::abs(f) > 1e-7 * std::max(1.0, u * u))
        throw ConstraintViolated("(u, v) does not satisfy the first constraint curve");

    const SymMat2 C = SymMat2::diag(l1, l2);
    const SymMat2 B{u, v, (1.0 + v * v) / u};
    const SymMat2 A = B + C;
    if (eig_sym2(A).l2 <= eps_geom || eig_sym2(B).l2 <= eps_geom)
        throw ConstraintViolated("cone matrix is not positive definite");
    if (std::abs(A.det() - 1.0) > 1e-7 || std::abs(B.det() - 1.0) > 1e-7)
        throw ConstraintViolated("cone matrix determinant drifted from 1");

    const Vec2 b{params.bx, params.by};
    const SymMat2 N = second_constraint_matrix(C, A, B);
    if (std::abs(N.quad(b) - 1.0) > 1e-7)
        throw ConstraintViolated("b does not satisfy the second constraint hyperbola");
    const Vec2 a = A.solve(B.mul(b));

    const HRCone coneA{A, a};
    const HRCone coneB{B, b};
    ConePairRealization out{coneA,
                            coneB,
                            generating_lines(GeneratedSurface{coneA}).pair,
                            generating_lines(GeneratedSurface{coneB}).pair,
                            params,
                            std::max(condition_number(A), condition_number(B))};
    return out;
}

ConePairRealization realize(const ConicCoeffs& conic, double u, int v_sign,
                            int b_sign) {
    const NormalizedHyperbola nh = normalize_hyperbola(conic);
    RealizationParams params = params_on_constraint(nh.l1, nh.l2, u, v_sign);

    const SymMat2 C = SymMat2::diag(nh.l1, nh.l2);
    const SymMat2 B{params.u, params.v, (1.0 + params.v * params.v) / params.u};
    const SymMat2 A = B + C;
    const SymMat2 N = second_constraint_matrix(C, A, B);
    const auto e = eig_sym2(N); // l1 > 0 > l2
    const RigidMotion rot = RigidMotion::rotation(e.phi);
    const Vec2 b = (b_sign >= 0 ? 1.0 : -1.0) / std::sqrt(e.l1) *
                   rot.apply_vector({1.0, 0.0});
    params.bx = b.x;
    params.by = b.y;

    ConePairRealization r = build_cone_pair(nh.l1, nh.l2, params);

    // Move the realization back into the input hyperbola's frame.
    const RigidMotion inv = nh.motion.inverse();
    auto move_cone = [&](const HRCone& c) {
        return HRCone{c.A.congruence_by_rotation(inv.phi), inv.apply(c.apex)};
    };
    auto move_pair = [&](const LinePair& p) {
        return make_line_pair(apply_motion(inv, p.l1), apply_motion(inv, p.l2));
    };
    r.coneA = move_cone(r.coneA);
    r.coneB = move_cone(r.coneB);
    r.linePairA = move_pair(r.linePairA);
    r.linePairB = move_pair(r.linePairB);
    return r;
}

std::vector<RealizationParams> sample_parameter_surface(const ConicCoeffs& conic,
                                                        int n) {
    const NormalizedHyperbola nh = normalize_hyperbola(conic);
    const AdmissibleU adm = admissible_u(nh.l1, nh.l2);
    std::vector<RealizationParams> out;

    // Stratified u with tanh spacing (dense near the boundary, reaching far
    // out), both v branches, both b antipodes, b swept along its hyperbola.
    const int strata = std::max(1, (n + 7) / 8);
    int bt = 0;
    while (static_cast<int>(out.size()) < n) {
        for (int j = 0; j < strata && static_cast<int>(out.size()) < n; ++j) {
            const double x = (j + 1.0) / (strata + 1.0);
            const double u = adm.lo + 0.05 + 10.0 * std::atanh(x) / std::atanh(0.99);
            for (int v_sign : {+1, -1}) {
                for (int b_sign : {+1, -1}) {
                    if (static_cast<int>(out.size()) >= n) break;
                    RealizationParams p = params_on_constraint(nh.l1, nh.l2, u, v_sign);
                    const SymMat2 C = SymMat2::diag(nh.l1, nh.l2);
                    const SymMat2 B{p.u, p.v, (1.0 + p.v * p.v) / p.u};
                    const SymMat2 N = second_constraint_matrix(C, B + C, B);
                    const auto e = eig_sym2(N);
                    const RigidMotion rot = RigidMotion::rotation(e.phi);
                    // Arclength-ish sweep along the b-hyperbola branch.
                    const double t = 0.4 * (bt % 5 - 2);
                    const Vec2 uv{std::cosh(t) / std::sqrt(e.l1),
                                  std::sinh(t) / std::sqrt(-e.l2)};
                    const Vec2 b = (b_sign >= 0 ? 1.0 : -1.0) * rot.apply_vector(uv);
                    p.bx = b.x;
                    p.by = b.y;
                    out.push_back(p);
                    ++bt;
                }
            }
        }
    }
    out.resize(n);
    return out;
}

} // namespace rectloci
