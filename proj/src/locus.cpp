#include "rectloci/locus.hpp"

#include <algorithm>
#include <cmath>

namespace rectloci {

namespace {

// Factor (x - center)^T C (x - center) = 0, det(C) < 0, into two crossing
// lines via the eigenframe of C.
std::pair<Line, Line> factor_crossing_lines(const SymMat2& C, Point2 center) {
    const auto e = eig_sym2(C); // l1 > 0 > l2
    const double slope = std::sqrt(e.l1 / -e.l2);
    const RigidMotion rot = RigidMotion::rotation(e.phi);
    // l1 u^2 + l2 v^2 = 0  =>  u = +-sqrt(-l2/l1) v; directions written with
    // the v-axis component so the factorization stays stable as l1 -> 0.
    const Vec2 d1 = rot.apply_vector({1.0, slope});
    const Vec2 d2 = rot.apply_vector({1.0, -slope});
    return {Line::from_point_direction(center, d1),
            Line::from_point_direction(center, d2)};
}

double config_scale(const LinePair& p1, const LinePair& p2) {
    double s = 1.0;
    auto grow = [&s](const LinePair& p) {
        if (p.is_parallel()) {
            s = std::max({s, std::abs(p.parallel().midline.offset), p.parallel().halfgap});
        } else {
            s = std::max({s, std::abs(p.crossing().x), std::abs(p.crossing().y)});
        }
    };
    grow(p1);
    grow(p2);
    return s;
}

} // namespace

DifferenceForm difference_form(const HRCone& s1, const HRCone& s2) {
    const SymMat2 C = s1.A - s2.A;
    if (C.max_abs() <= eps_geom)
        throw EqualConeMatrices("difference form requires distinct cone matrices");
    const Vec2 c = s1.A.mul(s1.apex) - s2.A.mul(s2.apex);
    const Point2 center = C.solve(c);
    const double k = c.dot(center) - s1.A.quad(s1.apex) + s2.A.quad(s2.apex);
    return {C, c, k, center};
}

std::pair<Line, Line> asymptotes(const DifferenceForm& d) {
    if (d.C.det() >= -eps_geom)
        throw NotHyperbolic("asymptotes require det(C) < 0");
    return factor_crossing_lines(d.C, d.center);
}

const char* locus_kind_name(const LocusClass& l) {
    struct V {
        const char* operator()(const EmptySet&) const { return "empty"; }
        const char* operator()(const SinglePoint&) const { return "point"; }
        const char* operator()(const FullPlane&) const { return "plane"; }
        const char* operator()(const WholeLine&) const { return "line"; }
        const char* operator()(const LineMinusOpenSegment&) const {
            return "line-minus-open-segment";
        }
        const char* operator()(const DegenerateHyperbola&) const {
            return "degenerate-hyperbola";
        }
        const char* operator()(const Hyperbola&) const { return "hyperbola"; }
    };
    return std::visit(V{}, l);
}

bool locus_approx_equal(const LocusClass& a, const LocusClass& b, double tol) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<EmptySet>(a) || std::holds_alternative<FullPlane>(a))
        return true;
    if (const auto* pa = std::get_if<SinglePoint>(&a))
        return approx_equal(pa->p, std::get<SinglePoint>(b).p, tol);
    if (const auto* la = std::get_if<WholeLine>(&a))
        return la->line.same_line(std::get<WholeLine>(b).line, tol);
    if (const auto* sa = std::get_if<LineMinusOpenSegment>(&a)) {
        const auto& sb = std::get<LineMinusOpenSegment>(b);
        const bool gaps = (approx_equal(sa->q1, sb.q1, tol) && approx_equal(sa->q2, sb.q2, tol)) ||
                          (approx_equal(sa->q1, sb.q2, tol) && approx_equal(sa->q2, sb.q1, tol));
        return gaps && sa->line.same_line(sb.line, tol);
    }
    if (const auto* da = std::get_if<DegenerateHyperbola>(&a)) {
        const auto& db = std::get<DegenerateHyperbola>(b);
        const bool lines = (da->l1.same_line(db.l1, tol) && da->l2.same_line(db.l2, tol)) ||
                           (da->l1.same_line(db.l2, tol) && da->l2.same_line(db.l1, tol));
        return lines && approx_equal(da->center, db.center, tol);
    }
    const auto& ha = std::get<Hyperbola>(a);
    const auto& hb = std::get<Hyperbola>(b);
    // (C, k) is only defined up to scale; compare C/k.
    return approx_equal(ha.center, hb.center, tol) &&
           approx_equal(ha.C * (1.0 / ha.k), hb.C * (1.0 / hb.k),
                        tol * std::max(1.0, (ha.C * (1.0 / ha.k)).max_abs()));
}

namespace {

LocusClass locus_two_slabs(const Slab& s1, const Slab& s2) {
    if (s1.midline.same_line(s2.midline))
        return WholeLine{s1.midline};
    if (std::abs(s1.midline.normal.cross(s2.midline.normal)) <= eps_geom)
        return EmptySet{};
    const LinePair mids = make_line_pair(s1.midline, s2.midline);
    return SinglePoint{mids.crossing()};
}

LocusClass locus_cone_slab(const HRCone& cone, const Slab& slab) {
    // Restrict the cone's quadratic to the midline and compare with d^2.
    const Point2 p0 = slab.midline.foot();
    const Vec2 u = slab.midline.direction();
    const Vec2 w = p0 - cone.apex;
    const double alpha = cone.A.quad(u); // > 0
    const double beta = 2.0 * u.dot(cone.A.mul(w));
    const double gamma = cone.A.quad(w) - slab.halfgap * slab.halfgap;
    const double disc = beta * beta - 4.0 * alpha * gamma;
    const double tol = eps_geom * std::max({1.0, beta * beta, std::abs(4.0 * alpha * gamma)});
    if (disc <= tol)
        return WholeLine{slab.midline}; // gap is empty or a single point
    const double root = std::sqrt(disc);
    const double t1 = (-beta - root) / (2.0 * alpha);
    const double t2 = (-beta + root) / (2.0 * alpha);
    return LineMinusOpenSegment{slab.midline, p0 + t1 * u, p0 + t2 * u};
}

LocusClass locus_two_cones(const HRCone& c1, const HRCone& c2, bool count_degenerate) {
    const double scale = std::max(
        {1.0, c1.apex.norm(), c2.apex.norm()});
    if ((c1.A - c2.A).max_abs() <= eps_geom) {
        if ((c1.apex - c2.apex).norm() <= eps_geom * scale) {
            // Same cone.  Orthogonal pairs through a common point give the
            // whole plane; identical non-orthogonal pairs only the crossing
            // unless degenerate rectangles are admitted.
            if ((c1.A - SymMat2::identity()).max_abs() <= unit_cone_eps)
                return FullPlane{};
            if (count_degenerate)
                return FullPlane{};
            return SinglePoint{c1.apex};
        }
        // Translates (includes two unit cones at different points): the
        // radical-axis line 2 c . x = a^T A a - b^T B b.
        const Vec2 c = c1.A.mul(c1.apex) - c2.A.mul(c2.apex);
        const double rhs = c1.A.quad(c1.apex) - c2.A.quad(c2.apex);
        return WholeLine{Line::from_normal_offset(2.0 * c, rhs)};
    }
    const DifferenceForm df = difference_form(c1, c2);
    const double k_tol = k_degenerate_rel *
                         (df.C.max_abs() * scale * scale + df.c.norm_sq());
    if (std::abs(df.k) <= k_tol) {
        auto [l1, l2] = factor_crossing_lines(df.C, df.center);
        return DegenerateHyperbola{l1, l2, df.center};
    }
    auto [a1, a2] = asymptotes(df);
    return Hyperbola{df.center, df.C, df.k, a1, a2};
}

} // namespace

LocusClass compute_locus(const LinePair& p1, const LinePair& p2, bool count_degenerate) {
    const GeneratedSurface s1 = surface_from_pair(p1);
    const GeneratedSurface s2 = surface_from_pair(p2);
    const bool par1 = std::holds_alternative<Slab>(s1);
    const bool par2 = std::holds_alternative<Slab>(s2);
    if (par1 && par2)
        return locus_two_slabs(std::get<Slab>(s1), std::get<Slab>(s2));
    if (par1)
        return locus_cone_slab(std::get<HRCone>(s2), std::get<Slab>(s1));
    if (par2)
        return locus_cone_slab(std::get<HRCone>(s1), std::get<Slab>(s2));
    return locus_two_cones(std::get<HRCone>(s1), std::get<HRCone>(s2), count_degenerate);
}

double membership_residual(const LinePair& p1, const LinePair& p2, Point2 p) {
    const double tol = eps_geom * std::max(1.0, p.norm());
    if (!p1.is_parallel() && !p2.is_parallel()) {
        const double h1 = midpoint_chord(p1, p).halflength;
        const double h2 = midpoint_chord(p2, p).halflength;
        return h1 * h1 - h2 * h2;
    }
    if (p1.is_parallel() && p2.is_parallel()) {
        const double s1 = p1.parallel().midline.signed_distance(p);
        if (std::abs(s1) > tol) return s1;
        const double s2 = p2.parallel().midline.signed_distance(p);
        if (std::abs(s2) > tol) return s2;
        return 0.0;
    }
    const LinePair& par = p1.is_parallel() ? p1 : p2;
    const LinePair& other = p1.is_parallel() ? p2 : p1;
    const double sd = par.parallel().midline.signed_distance(p);
    if (std::abs(sd) > tol) return sd;
    const double h = midpoint_chord(other, p).halflength;
    const double d = par.parallel().halfgap;
    return std::min(0.0, h * h - d * d);
}

namespace {

// Chord of a parallel pair through midline point p in unit direction u:
// endpoints p +- s u with s = d / (n . u).
Chord parallel_chord(const LinePair::Parallel& par, Point2 p, Vec2 u) {
    const double nu = par.midline.normal.dot(u);
    if (std::abs(nu) <= eps_geom)
        throw InvalidFamilyParam("chord direction parallel to the pair");
    const double s = par.halfgap / nu;
    const Point2 a = p + s * u;
    const Point2 b = p - s * u;
    return {a, b, p, std::abs(s)};
}

// The two chord directions of a parallel pair whose halflength is hl >= d.
std::array<double, 2> parallel_chord_angles(const LinePair::Parallel& par, double hl) {
    const double r = std::clamp(par.halfgap / hl, -1.0, 1.0);
    const double psi = std::atan2(par.midline.normal.y, par.midline.normal.x);
    const double delta = std::acos(r);
    return {psi + delta, psi - delta};
}

} // namespace

InscribedRectangle rectangle_at(const LinePair& p1, const LinePair& p2, Point2 p,
                                std::optional<double> family_param) {
    const double scale = std::max({1.0, p.norm(), config_scale(p1, p2)});
    const double mem_tol = 1e-7 * scale * scale;
    if (std::abs(membership_residual(p1, p2, p)) > mem_tol)
        throw NotOnLocus("point is not on the rectangle locus");
    const double len_tol = 1e-6 * scale;

    Chord c1, c2;
    if (!p1.is_parallel() && !p2.is_parallel()) {
        c1 = midpoint_chord(p1, p);
        c2 = midpoint_chord(p2, p);
    } else if (p1.is_parallel() != p2.is_parallel()) {
        const bool first_par = p1.is_parallel();
        const LinePair& par = first_par ? p1 : p2;
        const LinePair& other = first_par ? p2 : p1;
        const Chord forced = midpoint_chord(other, p);
        const double hl = forced.halflength;
        const double d = par.parallel().halfgap;
        Vec2 u;
        if (family_param) {
            u = {std::cos(*family_param), std::sin(*family_param)};
            const double nu = par.parallel().midline.normal.dot(u);
            if (std::abs(nu) <= eps_geom || std::abs(d / std::abs(nu) - hl) > len_tol)
                throw InvalidFamilyParam("requested chord angle cannot match the diagonal");
        } else if (std::abs(hl - d) <= len_tol) {
            u = par.parallel().midline.normal; // perpendicular chord is forced
        } else {
            throw MissingFamilyParam("parallel-pair chord angle required");
        }
        const Chord free = parallel_chord(par.parallel(), p, u);
        c1 = first_par ? free : forced;
        c2 = first_par ? forced : free;
    } else {
        if (!family_param)
            throw MissingFamilyParam("chord angle for the first parallel pair required");
        const Vec2 u1{std::cos(*family_param), std::sin(*family_param)};
        c1 = parallel_chord(p1.parallel(), p, u1);
        const double hl = c1.halflength;
        const double d2 = p2.parallel().halfgap;
        if (d2 > hl + len_tol)
            throw InvalidFamilyParam("second pair cannot match the requested diagonal");
        const auto angles = parallel_chord_angles(p2.parallel(), std::max(hl, d2));
        // Prefer the direction least aligned with the first diagonal so the
        // rectangle is nondegenerate whenever possible.
        Vec2 best{std::cos(angles[0]), std::sin(angles[0])};
        Vec2 alt{std::cos(angles[1]), std::sin(angles[1])};
        if (std::abs(alt.dot(u1)) < std::abs(best.dot(u1))) best = alt;
        c2 = parallel_chord(p2.parallel(), p, best);
    }

    InscribedRectangle rect;
    rect.center = p;
    rect.diag_halflength = std::max(c1.halflength, c2.halflength);
    std::array<std::pair<Point2, InscribedRectangle::LineRef>, 4> vs;
    auto assign = [](const LinePair& pair, Point2 q) {
        const double d1 = std::abs(pair.l1.signed_distance(q));
        const double d2 = std::abs(pair.l2.signed_distance(q));
        return d1 <= d2 ? 0 : 1;
    };
    vs[0] = {c1.p1, {0, assign(p1, c1.p1)}};
    vs[1] = {c1.p2, {0, assign(p1, c1.p2)}};
    vs[2] = {c2.p1, {1, assign(p2, c2.p1)}};
    vs[3] = {c2.p2, {1, assign(p2, c2.p2)}};
    const bool degenerate = (c1.p1 - c1.p2).norm() <= eps_geom * scale &&
                            (c2.p1 - c2.p2).norm() <= eps_geom * scale;
    if (!degenerate) {
        std::stable_sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a.first.y - p.y, a.first.x - p.x) <
                   std::atan2(b.first.y - p.y, b.first.x - p.x);
        });
    }
    for (int i = 0; i < 4; ++i) {
        rect.vertices[i] = vs[i].first;
        rect.assignment[i] = vs[i].second;
    }
    return rect;
}

} // namespace rectloci
