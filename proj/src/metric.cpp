#include "rectloci/metric.hpp"

namespace rectloci {

namespace {

// S A S for symmetric S and A; the product is symmetric even though the
// intermediate S A is not.
SymMat2 sandwich(const SymMat2& s, const SymMat2& a) {
    const double p11 = s.a11 * a.a11 + s.a12 * a.a12;
    const double p12 = s.a11 * a.a12 + s.a12 * a.a22;
    const double p21 = s.a12 * a.a11 + s.a22 * a.a12;
    const double p22 = s.a12 * a.a12 + s.a22 * a.a22;
    const double q11 = p11 * s.a11 + p12 * s.a12;
    const double q12 = p11 * s.a12 + p12 * s.a22;
    const double q21 = p21 * s.a11 + p22 * s.a12;
    const double q22 = p21 * s.a12 + p22 * s.a22;
    return {q11, 0.5 * (q12 + q21), q22};
}

// Preimage of a line under x -> T x: {x : n . T x = c} = {x : (T n) . x = c}.
Line pullback_line(const SymMat2& t, const Line& l) {
    return Line::from_normal_offset(t.mul(l.normal), l.offset);
}

} // namespace

InnerProduct make_inner_product(const SymMat2& m) {
    const SymMat2 t = sqrt_spd(m);
    return {m, t, t.inverse()};
}

Line transform_line(const InnerProduct& ip, const Line& l) {
    // Image under x -> T x is the pullback by T^{-1}.
    return pullback_line(ip.T_inv, l);
}

LinePair transform_pair(const InnerProduct& ip, const LinePair& p) {
    return make_line_pair(transform_line(ip, p.l1), transform_line(ip, p.l2));
}

LocusClass locus_in_metric(const InnerProduct& ip, const LinePair& p1,
                           const LinePair& p2) {
    if (ip.is_euclidean())
        return compute_locus(p1, p2);
    const LocusClass pushed =
        compute_locus(transform_pair(ip, p1), transform_pair(ip, p2));

    struct V {
        const InnerProduct& ip;
        LocusClass operator()(const EmptySet& e) const { return e; }
        LocusClass operator()(const FullPlane& f) const { return f; }
        LocusClass operator()(const SinglePoint& s) const {
            return SinglePoint{ip.T_inv.mul(s.p)};
        }
        LocusClass operator()(const WholeLine& w) const {
            return WholeLine{pullback_line(ip.T, w.line)};
        }
        LocusClass operator()(const LineMinusOpenSegment& s) const {
            return LineMinusOpenSegment{pullback_line(ip.T, s.line),
                                        ip.T_inv.mul(s.q1), ip.T_inv.mul(s.q2)};
        }
        LocusClass operator()(const DegenerateHyperbola& d) const {
            return DegenerateHyperbola{pullback_line(ip.T, d.l1),
                                       pullback_line(ip.T, d.l2),
                                       ip.T_inv.mul(d.center)};
        }
        LocusClass operator()(const Hyperbola& h) const {
            // (y - c)^T C (y - c) = k with y = T x pulls back by congruence.
            return Hyperbola{ip.T_inv.mul(h.center), sandwich(ip.T, h.C), h.k,
                             pullback_line(ip.T, h.asym1),
                             pullback_line(ip.T, h.asym2)};
        }
    };
    return std::visit(V{ip}, pushed);
}

} // namespace rectloci
