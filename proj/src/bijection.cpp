#include "rectlab/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "rectlab/patterns.hpp"

namespace rectlab {

std::string DeltaConvention::str() const {
    std::string out = direct_sum_cut == Orientation::vertical ? "vertical-direct" : "horizontal-direct";
    if (reversed) out += "/reversed";
    return out;
}

std::vector<DeltaConvention> all_conventions() {
    return {{Orientation::vertical, false},
            {Orientation::vertical, true},
            {Orientation::horizontal, false},
            {Orientation::horizontal, true}};
}

namespace {

// Reflection through the NW-SE diagonal; swaps vertical and horizontal cuts
// and keeps the NW-to-SE reading order.
Drawing antitranspose(const Drawing& d) {
    Drawing out{d.height, d.width, {}};
    for (const Rect& r : d.rects) {
        out.rects.push_back({d.height - r.y_hi, d.width - r.x_hi, d.height - r.y_lo, d.width - r.x_lo});
    }
    return out;
}

struct Split {
    Orientation orientation;
    std::vector<Rect> windows;  // pieces in NW-to-SE order
};

std::optional<Split> split_by_cuts(const Drawing& d) {
    const SegmentStructure s = extract_segments(d);
    std::vector<int> vcuts;
    std::vector<int> hcuts;
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation == Orientation::vertical && g.host_lo == SegmentStructure::south &&
            g.host_hi == SegmentStructure::north) {
            vcuts.push_back(g.coord);
        }
        if (g.orientation == Orientation::horizontal && g.host_lo == SegmentStructure::west &&
            g.host_hi == SegmentStructure::east) {
            hcuts.push_back(g.coord);
        }
    }
    if (!vcuts.empty()) {
        std::sort(vcuts.begin(), vcuts.end());
        vcuts.push_back(d.width);
        Split out{Orientation::vertical, {}};
        int from = 0;
        for (int x : vcuts) {
            out.windows.push_back({from, 0, x, d.height});
            from = x;
        }
        return out;
    }
    if (!hcuts.empty()) {
        std::sort(hcuts.rbegin(), hcuts.rend());
        hcuts.push_back(0);
        Split out{Orientation::horizontal, {}};
        int from = d.height;
        for (int y : hcuts) {
            out.windows.push_back({0, y, d.width, from});
            from = y;
        }
        return out;
    }
    return std::nullopt;
}

Permutation delta_rec(const Drawing& d, DeltaConvention conv) {
    if (d.size() == 1) return Permutation::identity(1);
    auto split = split_by_cuts(d);
    if (!split) throw std::invalid_argument("delta: drawing is not guillotine");
    if (conv.reversed) std::reverse(split->windows.begin(), split->windows.end());
    const bool direct = split->orientation == conv.direct_sum_cut;
    std::optional<Permutation> out;
    for (const Rect& w : split->windows) {
        Permutation piece = delta_rec(sub_drawing(d, w), conv);
        if (!out) {
            out = std::move(piece);
        } else {
            out = direct ? direct_sum(*out, piece) : skew_sum(*out, piece);
        }
    }
    return *out;
}

// Lays out `t` inside `region`, whose diagonal square starts at (x0, ytop).
void layout(const SeparableTree& t, const Rect& region, int x0, int ytop, std::vector<Rect>& out) {
    if (t.kind == SeparableTree::Kind::leaf) {
        out.push_back(region);
        return;
    }
    int off = 0;
    const std::size_t last = t.children.size() - 1;
    for (std::size_t j = 0; j < t.children.size(); ++j) {
        const SeparableTree& c = t.children[j];
        const int m = c.size();
        Rect sub = region;
        if (t.kind == SeparableTree::Kind::ascending) {
            sub.x_lo = j == 0 ? region.x_lo : x0 + off;
            sub.x_hi = j == last ? region.x_hi : x0 + off + m;
        } else {
            sub.y_hi = j == 0 ? region.y_hi : ytop - off;
            sub.y_lo = j == last ? region.y_lo : ytop - off - m;
        }
        layout(c, sub, x0 + off, ytop - off, out);
        off += m;
    }
}

}  // namespace

Permutation delta(const Drawing& d, DeltaConvention conv) {
    if (!is_guillotine(d)) throw std::invalid_argument("delta: drawing is not guillotine");
    if (!is_diagonal(d)) throw std::invalid_argument("delta: drawing is not diagonal");
    return delta_rec(d, conv);
}

Drawing delta_inv(const Permutation& p, DeltaConvention conv) {
    const Permutation q = conv.reversed ? p.reverse_complement() : p;
    const SeparableTree t = decompose(q);
    const int n = q.size();
    Drawing d{n, n, {}};
    d.rects.reserve(static_cast<std::size_t>(n));
    layout(t, Rect{0, 0, n, n}, 0, n, d.rects);
    return conv.direct_sum_cut == Orientation::vertical ? d : antitranspose(d);
}

int cut_tree_depth(const Drawing& d) {
    if (d.size() == 1) return 0;
    const auto split = split_by_cuts(d);
    if (!split) throw std::invalid_argument("cut_tree_depth: drawing is not guillotine");
    int depth = 0;
    for (const Rect& w : split->windows) depth = std::max(depth, cut_tree_depth(sub_drawing(d, w)));
    return depth + 1;
}

TranslationResult check_translation(const TableRow& row, const std::vector<Drawing>& classes,
                                    DeltaConvention conv) {
    TranslationResult res;
    const auto patterns = row.patterns();
    for (const Drawing& d : classes) {
        const SegmentStructure s = extract_segments(d);
        if (!avoids(s, guillotine_diagonal_set)) continue;
        const Permutation p = delta_rec(d, conv);
        const bool geo = avoids(s, row.avoided);
        const bool perm = avoids_all(p, patterns);
        ++res.checked;
        if (geo != perm) {
            res.ok = false;
            res.witness = d;
            res.witness_permutation = p;
            res.geometric_avoids = geo;
            res.permutation_avoids = perm;
            return res;
        }
    }
    return res;
}

TranslationResult check_translation(const TableRow& row, int n, DeltaConvention conv) {
    std::vector<Drawing> drawings;
    for_each_separable(n, [&](const Permutation& p) { drawings.push_back(delta_inv(p, conv)); });
    return check_translation(row, drawings, conv);
}

}  // namespace rectlab
