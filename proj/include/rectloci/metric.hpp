#pragma once

#include "rectloci/locus.hpp"

namespace rectloci {

// Inner product <u, v> = u^T M v on the plane, with the symmetric square
// root T = M^{1/2} cached.  Lengths in this metric equal Euclidean lengths
// after the plane is pushed forward by T.
struct InnerProduct {
    SymMat2 M;
    SymMat2 T;
    SymMat2 T_inv;

    bool is_euclidean() const {
        return M.a11 == 1.0 && M.a12 == 0.0 && M.a22 == 1.0;
    }
};

InnerProduct make_inner_product(const SymMat2& m); // throws NotPositiveDefinite

// Image of the pair under x -> T x; intersecting/parallel kind is preserved.
LinePair transform_pair(const InnerProduct& ip, const LinePair& p);

Line transform_line(const InnerProduct& ip, const Line& l);

// Rectangle locus with diagonals measured in the M-metric: compute the
// Euclidean locus of the pushed-forward pairs, then pull the geometry back
// through T^{-1}.
LocusClass locus_in_metric(const InnerProduct& ip, const LinePair& p1,
                           const LinePair& p2);

} // namespace rectloci
