#pragma once

#include <vector>

#include "rectloci/locus.hpp"

namespace rectloci {

struct NotAHyperbola : GeomError {
    using GeomError::GeomError;
};
struct OutOfRange : GeomError {
    using GeomError::GeomError;
};
struct ConstraintViolated : GeomError {
    using GeomError::GeomError;
};

// Hyperbola normalized to {x : (x - center)^T C (x - center) = 1}.
struct HyperbolaSpec {
    Point2 center;
    SymMat2 C; // det < 0
};

HyperbolaSpec hyperbola_spec(const ConicCoeffs& c); // throws NotAHyperbola

// Motion g and eigenvalues with g(hyperbola) = {x : x^T diag(l1,l2) x = 1},
// l1 > 0 > l2.
struct NormalizedHyperbola {
    RigidMotion motion;
    double l1;
    double l2;
};

NormalizedHyperbola normalize_hyperbola(const ConicCoeffs& c);

// A realization parameter point: (u, v) is the first row of B (on the
// constraint curve v^2 + (l2/l1)u^2 + l2 u + 1 = 0, u > max(0, -l1)) and
// b = (bx, by) lies on the second constraint hyperbola b^T C A^{-1} B b = 1.
struct RealizationParams {
    double u;
    double v;
    double bx;
    double by;
};

// Admissible u-interval endpoints for the constraint curve.
struct AdmissibleU {
    double lo;
    double hi; // +infinity when unbounded
};

AdmissibleU admissible_u(double l1, double l2);

// Solve the first constraint for v at the given u; sign picks the branch.
RealizationParams params_on_constraint(double l1, double l2, double u, int sign);

struct ConePairRealization {
    HRCone coneA;
    HRCone coneB;
    LinePair linePairA;
    LinePair linePairB;
    RealizationParams source;
    double condition; // max condition number of A and B
};

// B = [[u, v], [v, (1+v^2)/u]], A = B + diag(l1, l2), a = A^{-1} B b.
ConePairRealization build_cone_pair(double l1, double l2,
                                    const RealizationParams& params);

// Full inverse problem: normalize, solve the constraints, build the cones,
// and move everything back to the input hyperbola's frame.
ConePairRealization realize(const ConicCoeffs& conic, double u, int v_sign = +1,
                            int b_sign = +1);

std::vector<RealizationParams> sample_parameter_surface(const ConicCoeffs& conic,
                                                        int n);

} // namespace rectloci
