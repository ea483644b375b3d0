#include "rectloci/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

namespace rectloci {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

const char* locus_color(const LocusClass& l) {
    switch (l.index()) {
    case 0: return "#999999"; // empty (legend only)
    case 1: return "#d62728"; // point
    case 2: return "#9467bd"; // plane
    case 3: return "#2ca02c"; // line
    case 4: return "#17becf"; // line minus segment
    case 5: return "#ff7f0e"; // degenerate hyperbola
    default: return "#1f77b4"; // hyperbola
    }
}

// World window -> pixel panel with y flipped.
struct Mapper {
    ScanWindow w;
    double px;
    double ox, oy; // pixel offset of the panel

    double sx() const { return px / (w.hi.x - w.lo.x); }
    double sy() const { return px / (w.hi.y - w.lo.y); }
    double X(double x) const { return ox + (x - w.lo.x) * sx(); }
    double Y(double y) const { return oy + (w.hi.y - y) * sy(); }
    double len(double world) const { return world * 0.5 * (sx() + sy()); }
};

std::optional<std::pair<double, double>> clip_line(const Line& l, const ScanWindow& w) {
    const Point2 p0 = l.foot();
    const Vec2 u = l.direction();
    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    auto apply = [&](double p, double d, double lo, double hi) -> bool {
        if (std::abs(d) < 1e-15) return p >= lo && p <= hi;
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

void emit_segment(std::ostringstream& out, const Mapper& m, Point2 a, Point2 b,
                  const char* color, double width, const std::string& dash = "") {
    out << "<line x1=\"" << fmt(m.X(a.x)) << "\" y1=\"" << fmt(m.Y(a.y))
        << "\" x2=\"" << fmt(m.X(b.x)) << "\" y2=\"" << fmt(m.Y(b.y))
        << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt(m.len(width))
        << "\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
}

void emit_line(std::ostringstream& out, const Mapper& m, const Line& l,
               const char* color, double width) {
    const auto r = clip_line(l, m.w);
    if (!r) return;
    const Point2 a = l.foot() + r->first * l.direction();
    const Point2 b = l.foot() + r->second * l.direction();
    emit_segment(out, m, a, b, color, width);
}

void emit_circle(std::ostringstream& out, const Mapper& m, Point2 p, double r,
                 const char* color) {
    out << "<circle cx=\"" << fmt(m.X(p.x)) << "\" cy=\"" << fmt(m.Y(p.y))
        << "\" r=\"" << fmt(m.len(r)) << "\" fill=\"" << color << "\"/>\n";
}

void emit_hyperbola(std::ostringstream& out, const Mapper& m, const Hyperbola& h,
                    const RenderStyle& style) {
    const auto e = eig_sym2(h.C);
    const RigidMotion rot = RigidMotion::rotation(e.phi);
    const bool along_u = h.k > 0.0;
    const double ca = along_u ? std::sqrt(h.k / e.l1) : std::sqrt(h.k / e.l2);
    const double sa = along_u ? std::sqrt(-h.k / e.l2) : std::sqrt(-h.k / e.l1);
    auto branch_point = [&](double t, double sign) {
        const double cu = sign * ca * std::cosh(t);
        const double sv = sa * std::sinh(t);
        const Vec2 uv = along_u ? Vec2{cu, sv} : Vec2{sv, cu};
        return h.center + rot.apply_vector(uv);
    };
    // Extend the trace until both branch ends leave the window.
    double T = 1.0;
    const double diag = (m.w.hi - m.w.lo).norm();
    while (T < 50.0 && (branch_point(T, 1.0) - h.center).norm() < diag) T += 0.5;
    const int n = std::max(2, style.samples_per_branch);
    for (double sign : {1.0, -1.0}) {
        out << "<path d=\"";
        for (int i = 0; i <= n; ++i) {
            const double t = -T + 2.0 * T * i / n;
            const Point2 p = branch_point(t, sign);
            out << (i == 0 ? "M" : "L") << fmt(m.X(p.x)) << " " << fmt(m.Y(p.y));
        }
        out << "\" fill=\"none\" stroke=\"" << locus_color(LocusClass{h})
            << "\" stroke-width=\"" << fmt(m.len(style.locus_width)) << "\"/>\n";
    }
}

void emit_locus(std::ostringstream& out, const Mapper& m, const LocusClass& l,
                const RenderStyle& style) {
    const char* color = locus_color(l);
    if (const auto* p = std::get_if<SinglePoint>(&l)) {
        emit_circle(out, m, p->p, style.marker_radius, color);
    } else if (std::holds_alternative<FullPlane>(l)) {
        out << "<rect x=\"" << fmt(m.ox) << "\" y=\"" << fmt(m.oy) << "\" width=\""
            << fmt(m.px) << "\" height=\"" << fmt(m.px)
            << "\" fill=\"" << color << "\" fill-opacity=\"0.15\"/>\n";
    } else if (const auto* wl = std::get_if<WholeLine>(&l)) {
        emit_line(out, m, wl->line, color, style.locus_width);
    } else if (const auto* sgm = std::get_if<LineMinusOpenSegment>(&l)) {
        const Line& ln = sgm->line;
        const auto r = clip_line(ln, m.w);
        if (r) {
            const Vec2 u = ln.direction();
            double t1 = u.dot(sgm->q1 - ln.foot());
            double t2 = u.dot(sgm->q2 - ln.foot());
            if (t1 > t2) std::swap(t1, t2);
            auto pt = [&](double t) { return ln.foot() + t * u; };
            const double a = r->first, b = r->second;
            if (t1 > a)
                emit_segment(out, m, pt(a), pt(std::min(t1, b)), color, style.locus_width);
            if (t2 < b)
                emit_segment(out, m, pt(std::max(t2, a)), pt(b), color, style.locus_width);
            // Excluded open gap, dashed.
            emit_segment(out, m, pt(std::max(t1, a)), pt(std::min(t2, b)), color,
                         style.locus_width * 0.5, style.gap_dash);
        }
    } else if (const auto* d = std::get_if<DegenerateHyperbola>(&l)) {
        emit_line(out, m, d->l1, color, style.locus_width);
        emit_line(out, m, d->l2, color, style.locus_width);
    } else if (const auto* h = std::get_if<Hyperbola>(&l)) {
        emit_hyperbola(out, m, *h, style);
    }
}

void emit_panel(std::ostringstream& out, const Mapper& m, const Scene& scene,
                const std::vector<std::pair<std::string, LocusClass>>& loci,
                const std::vector<InscribedRectangle>& rects,
                const RenderStyle& style, const std::string& caption) {
    out << "<rect x=\"" << fmt(m.ox) << "\" y=\"" << fmt(m.oy) << "\" width=\""
        << fmt(m.px) << "\" height=\"" << fmt(m.px)
        << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    for (const auto& ll : scene.lines)
        emit_line(out, m, ll.line, "#444444", style.line_width);
    for (const auto& [tag, locus] : loci)
        emit_locus(out, m, locus, style);
    for (const auto& r : rects) {
        out << "<polygon points=\"";
        for (int i = 0; i < 4; ++i)
            out << fmt(m.X(r.vertices[i].x)) << "," << fmt(m.Y(r.vertices[i].y))
                << (i < 3 ? " " : "");
        out << "\" fill=\"none\" stroke=\"#e377c2\" stroke-width=\""
            << fmt(m.len(style.line_width)) << "\"/>\n";
    }
    for (Point2 mk : scene.markers)
        emit_circle(out, m, mk, style.marker_radius, "#000000");
    // Legend.
    double ty = m.oy + 16.0;
    if (!caption.empty()) {
        out << "<text x=\"" << fmt(m.ox + 6.0) << "\" y=\"" << fmt(ty)
            << "\" font-size=\"13\" font-family=\"sans-serif\">" << caption
            << "</text>\n";
        ty += 15.0;
    }
    for (const auto& [tag, locus] : loci) {
        std::string label = tag.empty() ? std::string(locus_kind_name(locus))
                                        : tag + ": " + locus_kind_name(locus);
        if (std::holds_alternative<EmptySet>(locus))
            label = tag.empty() ? "empty locus" : tag + ": empty locus";
        out << "<text x=\"" << fmt(m.ox + 6.0) << "\" y=\"" << fmt(ty)
            << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\""
            << locus_color(locus) << "\">" << label << "</text>\n";
        ty += 14.0;
    }
}

std::string document(double width, double height, const std::string& body) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 "
        << fmt(width) << " " << fmt(height) << "\">\n"
        << body << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_svg(const Scene& scene,
                       const std::vector<std::pair<std::string, LocusClass>>& loci,
                       const std::vector<InscribedRectangle>& rects,
                       const RenderStyle& style) {
    std::ostringstream body;
    const Mapper m{scene.window, static_cast<double>(style.panel_px), 0.0, 0.0};
    emit_panel(body, m, scene, loci, rects, style, "");
    return document(style.panel_px, style.panel_px, body.str());
}

std::string render_catalog_svg(const Scene& scene,
                               const std::vector<CatalogEntry>& entries,
                               const RenderStyle& style) {
    const int cols = 7;
    const int rows = static_cast<int>((entries.size() + cols - 1) / cols);
    const double pad = 8.0;
    std::ostringstream body;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int r = static_cast<int>(i) / cols;
        const int c = static_cast<int>(i) % cols;
        Mapper m{scene.window, static_cast<double>(style.panel_px),
                 pad + c * (style.panel_px + pad), pad + r * (style.panel_px + pad)};
        emit_panel(body, m, scene, {{entries[i].label.tag, entries[i].locus}}, {},
                   style, entries[i].label.tag);
    }
    return document(pad + cols * (style.panel_px + pad),
                    pad + rows * (style.panel_px + pad), body.str());
}

} // namespace rectloci
