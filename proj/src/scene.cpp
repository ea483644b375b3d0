#include "rectloci/scene.hpp"

#include <fstream>

namespace rectloci {

using nlohmann::json;

namespace {

Vec2 parse_vec(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SceneError("field '" + field + "' must be an array of two numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vec_json(Vec2 v) { return json::array({v.x, v.y}); }

json line_json(const Line& l) {
    return {{"normal", vec_json(l.normal)}, {"offset", l.offset}};
}

} // namespace

const Line& Scene::by_label(const std::string& label) const {
    for (const auto& ll : lines)
        if (ll.label == label) return ll.line;
    throw SceneError("no line labeled '" + label + "' in scene");
}

LinePair Scene::pair_for(const std::string& spec) const {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            if (!cur.empty()) labels.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) labels.push_back(cur);
    if (labels.size() == 1 && labels[0].size() == 2)
        labels = {labels[0].substr(0, 1), labels[0].substr(1, 1)};
    if (labels.size() != 2)
        throw SceneError("pair spec '" + spec + "' must name two lines (e.g. AB or A,B)");
    return make_line_pair(by_label(labels[0]), by_label(labels[1]));
}

Scene parse_scene(const json& j) {
    if (!j.is_object())
        throw SceneError("scene must be a JSON object");
    if (!j.contains("lines") || !j["lines"].is_array())
        throw SceneError("scene requires a 'lines' array");
    Scene s;
    for (const auto& lj : j["lines"]) {
        if (!lj.contains("label") || !lj["label"].is_string())
            throw SceneError("each line requires a string 'label'");
        LabeledLine ll;
        ll.label = lj["label"].get<std::string>();
        for (const auto& other : s.lines)
            if (other.label == ll.label)
                throw SceneError("duplicate line label '" + ll.label + "'");
        if (lj.contains("normal")) {
            if (!lj.contains("offset") || !lj["offset"].is_number())
                throw SceneError("line '" + ll.label + "': 'normal' form needs a numeric 'offset'");
            ll.line = Line::from_normal_offset(parse_vec(lj["normal"], "normal"),
                                               lj["offset"].get<double>());
        } else if (lj.contains("point") && lj.contains("direction")) {
            ll.line = Line::from_point_direction(parse_vec(lj["point"], "point"),
                                                 parse_vec(lj["direction"], "direction"));
        } else {
            throw SceneError("line '" + ll.label +
                             "': give either normal/offset or point/direction");
        }
        ll.source = lj;
        s.lines.push_back(std::move(ll));
    }
    if (j.contains("pairings")) {
        for (const auto& p : j["pairings"]) {
            if (!p.is_string())
                throw SceneError("'pairings' entries must be strings");
            s.pairings.push_back(p.get<std::string>());
        }
    }
    if (j.contains("metric")) {
        const auto& m = j["metric"];
        if (!m.is_array() || m.size() != 3)
            throw SceneError("'metric' must be [m11, m12, m22]");
        s.metric = SymMat2{m[0].get<double>(), m[1].get<double>(), m[2].get<double>()};
    }
    if (j.contains("window")) {
        const auto& w = j["window"];
        const Vec2 lo = parse_vec(w.at("lo"), "window.lo");
        const Vec2 hi = parse_vec(w.at("hi"), "window.hi");
        const int res = w.value("resolution", 400);
        s.window = make_window(lo, hi, res);
    }
    if (j.contains("markers"))
        for (const auto& m : j["markers"]) s.markers.push_back(parse_vec(m, "markers"));
    return s;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SceneError("cannot open scene file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SceneError(std::string("scene parse error: ") + e.what());
    }
    return parse_scene(j);
}

json scene_to_json(const Scene& s) {
    json j;
    j["lines"] = json::array();
    for (const auto& ll : s.lines)
        j["lines"].push_back(ll.source.is_null()
                                 ? json{{"label", ll.label},
                                        {"normal", vec_json(ll.line.normal)},
                                        {"offset", ll.line.offset}}
                                 : ll.source);
    if (!s.pairings.empty()) j["pairings"] = s.pairings;
    if (s.metric)
        j["metric"] = json::array({s.metric->a11, s.metric->a12, s.metric->a22});
    j["window"] = {{"lo", vec_json(s.window.lo)},
                   {"hi", vec_json(s.window.hi)},
                   {"resolution", s.window.resolution}};
    if (!s.markers.empty()) {
        j["markers"] = json::array();
        for (Point2 m : s.markers) j["markers"].push_back(vec_json(m));
    }
    return j;
}

json to_json(const LocusClass& l) {
    json j;
    j["kind"] = locus_kind_name(l);
    if (const auto* p = std::get_if<SinglePoint>(&l)) {
        j["point"] = vec_json(p->p);
    } else if (const auto* w = std::get_if<WholeLine>(&l)) {
        j["line"] = line_json(w->line);
    } else if (const auto* sgm = std::get_if<LineMinusOpenSegment>(&l)) {
        j["line"] = line_json(sgm->line);
        j["gap"] = json::array({vec_json(sgm->q1), vec_json(sgm->q2)});
    } else if (const auto* d = std::get_if<DegenerateHyperbola>(&l)) {
        j["lines"] = json::array({line_json(d->l1), line_json(d->l2)});
        j["center"] = vec_json(d->center);
    } else if (const auto* h = std::get_if<Hyperbola>(&l)) {
        j["center"] = vec_json(h->center);
        j["C"] = json::array({h->C.a11, h->C.a12, h->C.a22});
        j["k"] = h->k;
        j["asymptotes"] = json::array({line_json(h->asym1), line_json(h->asym2)});
    }
    return j;
}

json to_json(const InscribedRectangle& r) {
    json verts = json::array();
    json assign = json::array();
    for (int i = 0; i < 4; ++i) {
        verts.push_back(vec_json(r.vertices[i]));
        assign.push_back({{"pair", r.assignment[i].pair}, {"line", r.assignment[i].line}});
    }
    return {{"vertices", verts},
            {"center", vec_json(r.center)},
            {"diag_halflength", r.diag_halflength},
            {"assignment", assign}};
}

json to_json(const OracleReport& r, std::size_t max_points) {
    json pts = json::array();
    for (std::size_t i = 0; i < r.zero_set.size() && i < max_points; ++i)
        pts.push_back(vec_json(r.zero_set[i]));
    return {{"pass", r.pass},
            {"zero_set_count", r.zero_set.size()},
            {"zero_set_sample", pts},
            {"max_distance_to_claimed", r.max_distance_to_claimed},
            {"max_claimed_residual", r.max_claimed_residual},
            {"distance_tolerance", r.distance_tolerance},
            {"residual_tolerance", r.residual_tolerance}};
}

json to_json(const CatalogEntry& e) {
    json j{{"tag", e.label.tag},
           {"kind", e.label.kind == PairingLabel::Kind::disjoint  ? "disjoint"
                    : e.label.kind == PairingLabel::Kind::shared ? "shared"
                                                                 : "single"},
           {"locus", to_json(e.locus)}};
    if (!e.label.vertex_sequence.empty()) j["vertex_sequence"] = e.label.vertex_sequence;
    if (!e.notes.empty()) j["notes"] = e.notes;
    if (e.oracle_checked) j["oracle_passed"] = e.oracle_passed;
    return j;
}

json to_json(const ConePairRealization& r) {
    auto cone_json = [](const HRCone& c) {
        return json{{"A", json::array({c.A.a11, c.A.a12, c.A.a22})},
                    {"apex", vec_json(c.apex)}};
    };
    auto pair_json = [](const LinePair& p) {
        return json::array({line_json(p.l1), line_json(p.l2)});
    };
    return {{"coneA", cone_json(r.coneA)},
            {"coneB", cone_json(r.coneB)},
            {"linePairA", pair_json(r.linePairA)},
            {"linePairB", pair_json(r.linePairB)},
            {"params", {{"u", r.source.u},
                        {"v", r.source.v},
                        {"b", json::array({r.source.bx, r.source.by})}}},
            {"condition", r.condition}};
}

} // namespace rectloci
