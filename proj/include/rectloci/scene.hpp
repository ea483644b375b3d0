#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectloci/catalog.hpp"
#include "rectloci/locus.hpp"
#include "rectloci/metric.hpp"
#include "rectloci/oracle.hpp"
#include "rectloci/realization.hpp"

namespace rectloci {

struct SceneError : GeomError {
    using GeomError::GeomError;
};

struct LabeledLine {
    std::string label;
    Line line;
    // Preserved input form so a scene roundtrips losslessly.
    nlohmann::json source;
};

struct Scene {
    std::vector<LabeledLine> lines;
    std::vector<std::string> pairings; // optional pairing tags, e.g. "AB|CD"
    std::optional<SymMat2> metric;     // m11, m12, m22
    ScanWindow window = {{-10, -10}, {10, 10}, 400};
    std::vector<Point2> markers; // extra points to draw

    const Line& by_label(const std::string& label) const;
    // "AB" or "A,B" -> pair of scene lines.
    LinePair pair_for(const std::string& spec) const;
};

Scene parse_scene(const nlohmann::json& j);
Scene load_scene(const std::string& path);
nlohmann::json scene_to_json(const Scene& s);

nlohmann::json to_json(const LocusClass& l);
nlohmann::json to_json(const InscribedRectangle& r);
nlohmann::json to_json(const OracleReport& r, std::size_t max_points = 50);
nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json to_json(const ConePairRealization& r);

} // namespace rectloci
