#pragma once

// All geometric comparison tolerances live here.  Quantities are assumed to
// be unit-scaled (coordinates O(1..10)); callers that work at other scales
// multiply by their own scale factor where noted in the headers.

namespace rectloci {

// Absolute tolerance on unit-scaled quantities.  Double precision leaves
// roughly six digits of slack at this scale.
inline constexpr double eps_geom = 1e-9;

// Below this a cone is treated as a unit cone (generating lines are an
// orthogonal family, Theorem-level degeneracy).
inline constexpr double unit_cone_eps = eps_geom;

// Between unit_cone_eps and this, generating-line extraction still runs but
// is flagged low-confidence: det(A - I) -> 0 degrades the factorization.
inline constexpr double near_unit_cone_eps = 1e-6;

// Relative threshold routing the completed-square constant k of a difference
// form to the degenerate-hyperbola class.
inline constexpr double k_degenerate_rel = 1e-9;

} // namespace rectloci
