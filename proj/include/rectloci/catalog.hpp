#pragma once

#include <array>
#include <string>
#include <vector>

#include "rectloci/locus.hpp"

namespace rectloci {

// Exactly four labeled lines (labels A..D by position).
struct LineSet4 {
    std::array<Line, 4> lines;
};

LineSet4 make_line_set4(const std::array<Line, 4>& lines); // pairwise distinct

// One of the 3 + 12 + 6 = 21 combinatorial pairing classes of four lines.
struct PairingLabel {
    enum class Kind { disjoint, shared, single } kind;
    // Line indices: disjoint {a,b} vs {c,d}; shared {a,b} vs {b,c} with b
    // the common line; single just {a,b}.
    std::array<int, 4> idx; // unused entries are -1
    std::string tag;        // e.g. "AC|BD", "AB|BC", "AB"
    std::string vertex_sequence; // disjoint only, e.g. "ABCD/DCBA"
};

std::vector<PairingLabel> enumerate_pairings(const LineSet4& s);

// Locus of centers of rectangles with all four vertices on just these two
// lines (nondegenerate reading: vertices are not all collinear).
LocusClass single_pair_locus(const LinePair& pair);

struct CatalogEntry {
    PairingLabel label;
    LocusClass locus;
    std::vector<std::string> notes;
    bool oracle_checked = false;
    bool oracle_passed = false;
};

std::vector<CatalogEntry> catalog_loci(const LineSet4& s, bool oracle = false);

} // namespace rectloci
