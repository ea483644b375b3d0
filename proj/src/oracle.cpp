#include "rectloci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace rectloci {

namespace {

constexpr double refine_len = 1e-12;

double grid_step(double lo, double hi, int res) { return (hi - lo) / res; }

Point2 bisect_edge(Point2 a, Point2 b, double ga,
                   const std::function<double(Point2)>& g) {
    while ((b - a).norm() > refine_len) {
        const Point2 m = 0.5 * (a + b);
        const double gm = g(m);
        if (gm == 0.0) return m;
        if ((ga < 0.0) == (gm < 0.0)) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Parameter range of line.foot() + t * line.direction() inside the window.
std::optional<std::pair<double, double>> clip_line(const Line& l, const ScanWindow& w) {
    const Point2 p0 = l.foot();
    const Vec2 u = l.direction();
    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    auto apply = [&](double p, double d, double lo, double hi) -> bool {
        if (std::abs(d) < 1e-15)
            return p >= lo && p <= hi;
        double a = (lo - p) / d, b = (hi - p) / d;
        if (a > b) std::swap(a, b);
        tmin = std::max(tmin, a);
        tmax = std::min(tmax, b);
        return true;
    };
    if (!apply(p0.x, u.x, w.lo.x, w.hi.x)) return std::nullopt;
    if (!apply(p0.y, u.y, w.lo.y, w.hi.y)) return std::nullopt;
    if (tmin > tmax) return std::nullopt;
    return std::make_pair(tmin, tmax);
}

std::vector<Point2> scan_two_intersecting(const LinePair& p1, const LinePair& p2,
                                          const ScanWindow& w) {
    auto g = [&](Point2 p) { return membership_residual(p1, p2, p); };
    const int n = w.resolution;
    const double dx = grid_step(w.lo.x, w.hi.x, n);
    const double dy = grid_step(w.lo.y, w.hi.y, n);
    std::vector<double> row(n + 1), prev(n + 1);
    std::vector<Point2> out;
    for (int j = 0; j <= n; ++j) {
        const double y = w.lo.y + j * dy;
        for (int i = 0; i <= n; ++i) {
            const double x = w.lo.x + i * dx;
            row[i] = g({x, y});
            if (i > 0 && row[i - 1] * row[i] < 0.0)
                out.push_back(bisect_edge({x - dx, y}, {x, y}, row[i - 1], g));
            if (j > 0 && prev[i] * row[i] < 0.0)
                out.push_back(bisect_edge({x, y - dy}, {x, y}, prev[i], g));
        }
        std::swap(prev, row);
    }
    return out;
}

// Locus lies on the slab's midline: 1D scan of chord-halflength^2 - d^2.
std::vector<Point2> scan_slab_cone(const LinePair& par, const LinePair& other,
                                   const ScanWindow& w) {
    const Line mid = par.parallel().midline;
    const double d2 = par.parallel().halfgap * par.parallel().halfgap;
    const auto range = clip_line(mid, w);
    if (!range) return {};
    const Point2 p0 = mid.foot();
    const Vec2 u = mid.direction();
    auto f = [&](double t) {
        const double hl = midpoint_chord(other, p0 + t * u).halflength;
        return hl * hl - d2;
    };
    auto gp = [&](Point2 p) {
        const double hl = midpoint_chord(other, p).halflength;
        return hl * hl - d2;
    };
    std::vector<Point2> out;
    const int n = w.resolution;
    const double dt = (range->second - range->first) / n;
    double fprev = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = range->first + i * dt;
        const double ft = f(t);
        if (ft >= 0.0)
            out.push_back(p0 + t * u);
        if (i > 0 && fprev * ft < 0.0)
            out.push_back(bisect_edge(p0 + (t - dt) * u, p0 + t * u, fprev, gp));
        fprev = ft;
    }
    return out;
}

std::vector<Point2> scan_two_slabs(const LinePair& p1, const LinePair& p2,
                                   const ScanWindow& w) {
    const Line m1 = p1.parallel().midline;
    const Line m2 = p2.parallel().midline;
    if (m1.same_line(m2)) {
        const auto range = clip_line(m1, w);
        if (!range) return {};
        std::vector<Point2> out;
        const int n = w.resolution;
        for (int i = 0; i <= n; ++i) {
            const double t = range->first + i * (range->second - range->first) / n;
            out.push_back(m1.foot() + t * m1.direction());
        }
        return out;
    }
    if (std::abs(m1.normal.cross(m2.normal)) <= eps_geom)
        return {};
    const Point2 x = make_line_pair(m1, m2).crossing();
    if (w.contains(x)) return {x};
    return {};
}

} // namespace

ScanWindow make_window(Point2 lo, Point2 hi, int resolution) {
    if (!(hi.x > lo.x && hi.y > lo.y))
        throw GeomError("scan window must have positive extent");
    if (resolution < 2)
        throw GeomError("scan resolution must be at least 2");
    return {lo, hi, resolution};
}

std::vector<Point2> scan_zero_set(const LinePair& p1, const LinePair& p2,
                                  const ScanWindow& w) {
    const bool par1 = p1.is_parallel();
    const bool par2 = p2.is_parallel();
    if (par1 && par2) return scan_two_slabs(p1, p2, w);
    if (par1) return scan_slab_cone(p1, p2, w);
    if (par2) return scan_slab_cone(p2, p1, w);
    return scan_two_intersecting(p1, p2, w);
}

double distance_to_locus(const LocusClass& l, Point2 p) {
    struct V {
        Point2 p;
        double operator()(const EmptySet&) const {
            return std::numeric_limits<double>::infinity();
        }
        double operator()(const SinglePoint& s) const { return (p - s.p).norm(); }
        double operator()(const FullPlane&) const { return 0.0; }
        double operator()(const WholeLine& w) const {
            return std::abs(w.line.signed_distance(p));
        }
        double operator()(const LineMinusOpenSegment& s) const {
            const Point2 proj = s.line.project(p);
            const Vec2 u = s.line.direction();
            const double t = u.dot(proj - s.line.foot());
            double t1 = u.dot(s.q1 - s.line.foot());
            double t2 = u.dot(s.q2 - s.line.foot());
            if (t1 > t2) std::swap(t1, t2);
            if (t > t1 && t < t2)
                return std::min((p - s.q1).norm(), (p - s.q2).norm());
            return (p - proj).norm();
        }
        double operator()(const DegenerateHyperbola& d) const {
            return std::min(std::abs(d.l1.signed_distance(p)),
                            std::abs(d.l2.signed_distance(p)));
        }
        double operator()(const Hyperbola& h) const {
            const double f = h.residual(p);
            const double grad = 2.0 * h.C.mul(p - h.center).norm();
            return std::abs(f) / std::max(grad, 1e-9);
        }
    };
    return std::visit(V{p}, l);
}

std::vector<Point2> sample_locus(const LocusClass& l, const ScanWindow& w, int n) {
    std::vector<Point2> out;
    auto sample_line_range = [&](const Line& line, double skip_lo, double skip_hi) {
        const auto range = clip_line(line, w);
        double a, b;
        if (range) {
            a = range->first;
            b = range->second;
        } else {
            const double t0 = line.direction().dot(
                0.5 * (w.lo + w.hi) - line.foot());
            a = t0 - 1.0;
            b = t0 + 1.0;
        }
        for (int i = 0; i <= n; ++i) {
            const double t = a + (b - a) * i / std::max(1, n);
            if (t > skip_lo && t < skip_hi) continue;
            out.push_back(line.foot() + t * line.direction());
        }
    };
    const double inf = std::numeric_limits<double>::infinity();

    if (std::holds_alternative<EmptySet>(l)) {
        return out;
    } else if (const auto* s = std::get_if<SinglePoint>(&l)) {
        out.push_back(s->p);
    } else if (std::holds_alternative<FullPlane>(l)) {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> ux(w.lo.x, w.hi.x), uy(w.lo.y, w.hi.y);
        for (int i = 0; i < n; ++i) out.push_back({ux(rng), uy(rng)});
    } else if (const auto* wl = std::get_if<WholeLine>(&l)) {
        sample_line_range(wl->line, inf, inf);
    } else if (const auto* ls = std::get_if<LineMinusOpenSegment>(&l)) {
        const Vec2 u = ls->line.direction();
        double t1 = u.dot(ls->q1 - ls->line.foot());
        double t2 = u.dot(ls->q2 - ls->line.foot());
        if (t1 > t2) std::swap(t1, t2);
        sample_line_range(ls->line, t1 + 1e-9, t2 - 1e-9);
        out.push_back(ls->q1);
        out.push_back(ls->q2);
    } else if (const auto* dh = std::get_if<DegenerateHyperbola>(&l)) {
        sample_line_range(dh->l1, inf, inf);
        sample_line_range(dh->l2, inf, inf);
    } else if (const auto* h = std::get_if<Hyperbola>(&l)) {
        const auto e = eig_sym2(h->C); // l1 > 0 > l2
        const RigidMotion rot = RigidMotion::rotation(e.phi);
        const bool along_u = h->k > 0.0;
        const double ca = along_u ? std::sqrt(h->k / e.l1) : std::sqrt(h->k / e.l2);
        const double sa = along_u ? std::sqrt(-h->k / e.l2) : std::sqrt(-h->k / e.l1);
        auto branch_point = [&](double t, double sign) {
            const double cu = sign * ca * std::cosh(t);
            const double sv = sa * std::sinh(t);
            const Vec2 uv = along_u ? Vec2{cu, sv} : Vec2{sv, cu};
            return h->center + rot.apply_vector(uv);
        };
        // Grow T until both branches leave the window.
        double T = 1.0;
        const double diag = (w.hi - w.lo).norm();
        while (T < 50.0 && ((branch_point(T, 1).x - h->center.x) *
                                    (branch_point(T, 1).x - h->center.x) +
                                (branch_point(T, 1).y - h->center.y) *
                                    (branch_point(T, 1).y - h->center.y) <
                            diag * diag))
            T += 0.5;
        for (int i = 0; i <= n; ++i) {
            const double t = -T + 2.0 * T * i / std::max(1, n);
            for (double sign : {1.0, -1.0}) {
                const Point2 p = branch_point(t, sign);
                if (w.contains(p)) out.push_back(p);
            }
        }
    }
    return out;
}

OracleReport verify_locus(const LinePair& p1, const LinePair& p2,
                          const LocusClass& claimed, const ScanWindow& w,
                          double tol) {
    OracleReport rep;
    double scale = 1.0;
    for (Point2 corner : {w.lo, w.hi}) scale = std::max(scale, corner.norm());
    rep.distance_tolerance = tol * scale;
    rep.residual_tolerance = tol * scale * scale;

    if (!std::holds_alternative<FullPlane>(claimed)) {
        rep.zero_set = scan_zero_set(p1, p2, w);
        for (Point2 p : rep.zero_set)
            rep.max_distance_to_claimed =
                std::max(rep.max_distance_to_claimed, distance_to_locus(claimed, p));
    }

    const int n_samples = std::holds_alternative<FullPlane>(claimed) ? 1000 : 200;
    for (Point2 p : sample_locus(claimed, w, n_samples))
        rep.max_claimed_residual = std::max(
            rep.max_claimed_residual, std::abs(membership_residual(p1, p2, p)));

    rep.pass = rep.max_distance_to_claimed <= rep.distance_tolerance &&
               rep.max_claimed_residual <= rep.residual_tolerance;
    return rep;
}

namespace {

double metric_halflength_sq(const Chord& c, const SymMat2& m) {
    const Vec2 d = 0.5 * (c.p1 - c.p2);
    return m.quad(d);
}

Chord chord_for_angle(const LinePair& pair, Point2 center, double angle) {
    const Vec2 u{std::cos(angle), std::sin(angle)};
    const auto& par = pair.parallel();
    const double nu = par.midline.normal.dot(u);
    if (std::abs(nu) <= 1e-12)
        return {center, center, center, std::numeric_limits<double>::infinity()};
    const double s = par.halfgap / nu;
    const Point2 a = center + s * u;
    const Point2 b = center - s * u;
    return {a, b, center, std::abs(s)};
}

InscribedRectangle build_rect(const Chord& c1, const Chord& c2, Point2 center,
                              const LinePair& p1, const LinePair& p2) {
    InscribedRectangle r;
    r.center = center;
    r.diag_halflength = std::max(c1.halflength, c2.halflength);
    auto assign = [](const LinePair& pr, Point2 q) {
        return std::abs(pr.l1.signed_distance(q)) <= std::abs(pr.l2.signed_distance(q))
                   ? 0
                   : 1;
    };
    std::array<std::pair<Point2, InscribedRectangle::LineRef>, 4> vs = {
        std::pair{c1.p1, InscribedRectangle::LineRef{0, assign(p1, c1.p1)}},
        std::pair{c1.p2, InscribedRectangle::LineRef{0, assign(p1, c1.p2)}},
        std::pair{c2.p1, InscribedRectangle::LineRef{1, assign(p2, c2.p1)}},
        std::pair{c2.p2, InscribedRectangle::LineRef{1, assign(p2, c2.p2)}}};
    std::stable_sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.first.y - center.y, a.first.x - center.x) <
               std::atan2(b.first.y - center.y, b.first.x - center.x);
    });
    for (int i = 0; i < 4; ++i) {
        r.vertices[i] = vs[i].first;
        r.assignment[i] = vs[i].second;
    }
    return r;
}

} // namespace

BruteRectangle brute_rectangle_search(const std::array<Line, 4>& lines, Point2 center,
                                      const SymMat2& metric) {
    const LinePair p1 = make_line_pair(lines[0], lines[1]);
    const LinePair p2 = make_line_pair(lines[2], lines[3]);

    auto chord1 = [&](double t) {
        return p1.is_parallel() ? chord_for_angle(p1, center, t)
                                : midpoint_chord(p1, center);
    };
    auto chord2 = [&](double t) {
        return p2.is_parallel() ? chord_for_angle(p2, center, t)
                                : midpoint_chord(p2, center);
    };
    auto mismatch = [&](double t1, double t2) {
        const double a = metric_halflength_sq(chord1(t1), metric);
        const double b = metric_halflength_sq(chord2(t2), metric);
        if (!std::isfinite(a) || !std::isfinite(b))
            return std::numeric_limits<double>::infinity();
        return std::abs(a - b);
    };

    const int freedom = (p1.is_parallel() ? 1 : 0) + (p2.is_parallel() ? 1 : 0);
    double best1 = 0.0, best2 = 0.0;
    double best = mismatch(0.0, 0.0);

    const double pi = std::acos(-1.0);
    auto refine = [&](double& t, auto objective) {
        // coarse scan then golden-section polish
        const int steps = 720;
        double bt = t, bv = objective(t);
        for (int i = 0; i < steps; ++i) {
            const double tt = pi * i / steps;
            const double v = objective(tt);
            if (v < bv) {
                bv = v;
                bt = tt;
            }
        }
        double lo = bt - pi / steps, hi = bt + pi / steps;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 200; ++it) {
            const double m1 = hi - gr * (hi - lo);
            const double m2 = lo + gr * (hi - lo);
            if (objective(m1) < objective(m2))
                hi = m2;
            else
                lo = m1;
        }
        t = 0.5 * (lo + hi);
        return objective(t);
    };

    if (freedom == 1) {
        if (p1.is_parallel())
            best = refine(best1, [&](double t) { return mismatch(t, 0.0); });
        else
            best = refine(best2, [&](double t) { return mismatch(0.0, t); });
    } else if (freedom == 2) {
        // Outer coarse scan on t1, inner refinement on t2.
        double bv = std::numeric_limits<double>::infinity();
        for (int i = 1; i < 64; ++i) {
            const double t1 = pi * i / 64;
            double t2 = 0.0;
            const double v = refine(t2, [&](double t) { return mismatch(t1, t); });
            if (v < bv) {
                bv = v;
                best1 = t1;
                best2 = t2;
            }
        }
        best = bv;
    }

    return {build_rect(chord1(best1), chord2(best2), center, p1, p2), best};
}

} // namespace rectloci
