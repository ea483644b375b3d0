#include "rectloci/catalog.hpp"

#include "rectloci/oracle.hpp"

namespace rectloci {

namespace {
const char* letters = "ABCD";

std::string pair_tag(int a, int b) {
    return std::string{letters[a]} + std::string{letters[b]};
}
} // namespace

LineSet4 make_line_set4(const std::array<Line, 4>& lines) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (lines[i].same_line(lines[j]))
                throw GeomError("line set requires four pairwise distinct lines");
    return {lines};
}

std::vector<PairingLabel> enumerate_pairings(const LineSet4&) {
    std::vector<PairingLabel> out;
    // 3 perfect matchings: one diagonal per pair, vertices in sequence.
    const int matchings[3][4] = {{0, 2, 1, 3}, {0, 1, 2, 3}, {0, 3, 1, 2}};
    for (const auto& m : matchings) {
        PairingLabel l{PairingLabel::Kind::disjoint, {m[0], m[1], m[2], m[3]},
                       pair_tag(m[0], m[1]) + "|" + pair_tag(m[2], m[3]), ""};
        // The diagonals {a,b} and {c,d} interleave as a c b d around the
        // rectangle (and its reversal).
        std::string seq{letters[m[0]], letters[m[2]], letters[m[1]], letters[m[3]]};
        l.vertex_sequence = seq + "/" + std::string(seq.rbegin(), seq.rend());
        out.push_back(l);
    }
    // 12 shared-line groups: common line y, distinct others x, z (ordered
    // {x,y} vs {y,z} equals {z,y} vs {y,x}, so take x < z).
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x)
            for (int z = x + 1; z < 4; ++z) {
                if (x == y || z == y) continue;
                out.push_back({PairingLabel::Kind::shared,
                               {std::min(x, y), std::max(x, y), std::min(y, z),
                                std::max(y, z)},
                               pair_tag(std::min(x, y), std::max(x, y)) + "|" +
                                   pair_tag(std::min(y, z), std::max(y, z)),
                               ""});
            }
    // 6 single pairs.
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            out.push_back({PairingLabel::Kind::single, {a, b, -1, -1},
                           pair_tag(a, b), ""});
    return out;
}

LocusClass single_pair_locus(const LinePair& pair) {
    if (pair.is_parallel())
        return WholeLine{pair.parallel().midline};
    // A nondegenerate rectangle on just two crossing lines must have its
    // diagonals along them, pinning the center to the crossing.
    return SinglePoint{pair.crossing()};
}

std::vector<CatalogEntry> catalog_loci(const LineSet4& s, bool oracle) {
    std::vector<CatalogEntry> out;
    const ScanWindow w = make_window({-10, -10}, {10, 10}, 400);
    for (const PairingLabel& label : enumerate_pairings(s)) {
        CatalogEntry e{label, EmptySet{}, {}, false, false};
        if (label.kind == PairingLabel::Kind::single) {
            const LinePair p = make_line_pair(s.lines[label.idx[0]], s.lines[label.idx[1]]);
            e.locus = single_pair_locus(p);
            if (!p.is_parallel())
                e.notes.push_back(
                    "single crossing pair: nondegenerate reading gives a point, "
                    "not a line; admitting collapsed rectangles would give the "
                    "whole plane");
        } else {
            const LinePair p1 = make_line_pair(s.lines[label.idx[0]], s.lines[label.idx[1]]);
            const LinePair p2 = make_line_pair(s.lines[label.idx[2]], s.lines[label.idx[3]]);
            e.locus = compute_locus(p1, p2);
            if (label.kind == PairingLabel::Kind::shared &&
                std::holds_alternative<DegenerateHyperbola>(e.locus))
                e.notes.push_back("shared-line pairing: constant k measured below "
                                  "the degeneracy threshold");
            if (oracle) {
                e.oracle_checked = true;
                e.oracle_passed = verify_locus(p1, p2, e.locus, w, 1e-6).pass;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace rectloci
