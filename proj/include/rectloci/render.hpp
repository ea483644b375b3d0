#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rectloci/scene.hpp"

namespace rectloci {

struct RenderStyle {
    double line_width = 0.03;  // world units
    double locus_width = 0.06;
    int samples_per_branch = 256; // >= 2
    std::string gap_dash = "6,4"; // dash pattern for excluded open segments
    double marker_radius = 0.12;
    int panel_px = 480;
};

// Single-panel figure: scene lines, computed loci (labeled), optional
// rectangles and markers.  Output is valid SVG 1.1 and byte-stable.
std::string render_svg(const Scene& scene,
                       const std::vector<std::pair<std::string, LocusClass>>& loci,
                       const std::vector<InscribedRectangle>& rects = {},
                       const RenderStyle& style = {});

// 21-panel grid, one panel per catalog entry.
std::string render_catalog_svg(const Scene& scene,
                               const std::vector<CatalogEntry>& entries,
                               const RenderStyle& style = {});

} // namespace rectloci
