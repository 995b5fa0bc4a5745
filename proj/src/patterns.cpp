#include "rectlab/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectlab {

PatternSet::PatternSet(std::initializer_list<PatternId> ids) {
    for (PatternId p : ids) bits_ = with(p).bits_;
}

PatternSet PatternSet::parse(std::string_view digits) {
    PatternSet out;
    for (char c : digits) {
        if (c < '1' || c > '8') throw std::invalid_argument("pattern set: bad digit '" + std::string(1, c) + "'");
        const auto p = static_cast<PatternId>(c - '0');
        if (out.contains(p)) throw std::invalid_argument("pattern set: repeated digit '" + std::string(1, c) + "'");
        out = out.with(p);
    }
    return out;
}

std::vector<PatternId> PatternSet::ids() const {
    std::vector<PatternId> out;
    for (int i = 1; i <= 8; ++i) {
        if (contains(static_cast<PatternId>(i))) out.push_back(static_cast<PatternId>(i));
    }
    return out;
}

std::string PatternSet::digits() const {
    std::string out;
    for (PatternId p : ids()) out.push_back(static_cast<char>('0' + static_cast<int>(p)));
    return out;
}

std::string to_string(PatternId p) { return "P" + std::to_string(static_cast<int>(p)); }

namespace {

const Segment& seg(const SegmentStructure& s, int i) { return s.segments[static_cast<std::size_t>(i)]; }

bool is_internal(const SegmentStructure& s, int i) { return i >= 4 && !seg(s, i).is_boundary(); }

// Two attachments on one host appearing in the given order along it.
std::optional<std::pair<int, int>> ordered_pair(const Segment& g, Side first, Side second) {
    std::optional<int> seen;
    for (const Attachment& a : g.attachments) {
        if (a.side == first && !seen) seen = a.segment;
        if (a.side == second && seen) return std::pair{*seen, a.segment};
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_windmill(const SegmentStructure& s, PatternId orientation) {
    for (const Windmill& w : find_windmills(s)) {
        if (w.orientation == orientation) {
            return PatternWitness{orientation, {w.top, w.right, w.bottom, w.left}, "windmill"};
        }
    }
    return std::nullopt;
}

// P3: on a vertical segment, an attachment from the left lies below one from
// the right. Diagonal drawings keep every left attachment above every right one.
std::optional<PatternWitness> find_p3(const SegmentStructure& s) {
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation != Orientation::vertical) continue;
        if (auto p = ordered_pair(g, Side::left, Side::right)) {
            return PatternWitness{PatternId::P3, {static_cast<int>(i), p->first, p->second},
                                  "left attachment below right attachment"};
        }
    }
    return std::nullopt;
}

// P4: on a horizontal segment, an attachment from below lies left of one from above.
std::optional<PatternWitness> find_p4(const SegmentStructure& s) {
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation != Orientation::horizontal) continue;
        if (auto p = ordered_pair(g, Side::below, Side::above)) {
            return PatternWitness{PatternId::P4, {static_cast<int>(i), p->first, p->second},
                                  "below attachment left of above attachment"};
        }
    }
    return std::nullopt;
}

// P5: vertical segment with a right attachment below a left attachment.
std::optional<PatternWitness> find_p5(const SegmentStructure& s) {
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation != Orientation::vertical) continue;
        if (auto p = ordered_pair(g, Side::right, Side::left)) {
            return PatternWitness{PatternId::P5, {static_cast<int>(i), p->second, p->first},
                                  "vertical segment attached on both sides"};
        }
    }
    return std::nullopt;
}

// P6: horizontal segment with an above attachment left of a below attachment.
std::optional<PatternWitness> find_p6(const SegmentStructure& s) {
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation != Orientation::horizontal) continue;
        if (auto p = ordered_pair(g, Side::above, Side::below)) {
            return PatternWitness{PatternId::P6, {static_cast<int>(i), p->first, p->second},
                                  "horizontal segment attached on both sides"};
        }
    }
    return std::nullopt;
}

// P7: a rectangular union of rectangles whose left side lies on a segment with
// a horizontal segment attached from the left and whose right side lies on a
// segment with a horizontal segment attached from the right. The region exists
// iff two horizontal lines (segments or N/S) span the gap inside the common
// vertical range of both sides.
std::optional<PatternWitness> find_p7(const SegmentStructure& s) {
    for (std::size_t l = 4; l < s.segments.size(); ++l) {
        const Segment& sl = s.segments[l];
        if (sl.orientation != Orientation::vertical || !sl.has_attachment_on(Side::left)) continue;
        for (std::size_t r = 4; r < s.segments.size(); ++r) {
            const Segment& sr = s.segments[r];
            if (sr.orientation != Orientation::vertical || sr.coord <= sl.coord ||
                !sr.has_attachment_on(Side::right)) {
                continue;
            }
            const int lo = std::max(sl.lo, sr.lo);
            const int hi = std::min(sl.hi, sr.hi);
            if (lo >= hi) continue;
            std::vector<int> spanning;
            for (std::size_t h = 0; h < s.segments.size(); ++h) {
                const Segment& sh = s.segments[h];
                if (sh.orientation != Orientation::horizontal) continue;
                if (sh.lo <= sl.coord && sr.coord <= sh.hi && lo <= sh.coord && sh.coord <= hi) {
                    spanning.push_back(static_cast<int>(h));
                    if (spanning.size() == 2) {
                        return PatternWitness{PatternId::P7,
                                              {static_cast<int>(l), static_cast<int>(r), spanning[0], spanning[1]},
                                              "region flanked by left and right attachments"};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// P8: transpose of P7 (top side with an attachment from above, bottom side
// with an attachment from below).
std::optional<PatternWitness> find_p8(const SegmentStructure& s) {
    for (std::size_t b = 4; b < s.segments.size(); ++b) {
        const Segment& sb = s.segments[b];
        if (sb.orientation != Orientation::horizontal || !sb.has_attachment_on(Side::below)) continue;
        for (std::size_t t = 4; t < s.segments.size(); ++t) {
            const Segment& st = s.segments[t];
            if (st.orientation != Orientation::horizontal || st.coord <= sb.coord ||
                !st.has_attachment_on(Side::above)) {
                continue;
            }
            const int lo = std::max(sb.lo, st.lo);
            const int hi = std::min(sb.hi, st.hi);
            if (lo >= hi) continue;
            std::vector<int> spanning;
            for (std::size_t v = 0; v < s.segments.size(); ++v) {
                const Segment& sv = s.segments[v];
                if (sv.orientation != Orientation::vertical) continue;
                if (sv.lo <= sb.coord && st.coord <= sv.hi && lo <= sv.coord && sv.coord <= hi) {
                    spanning.push_back(static_cast<int>(v));
                    if (spanning.size() == 2) {
                        return PatternWitness{PatternId::P8,
                                              {static_cast<int>(b), static_cast<int>(t), spanning[0], spanning[1]},
                                              "region flanked by below and above attachments"};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Windmill> find_windmills(const SegmentStructure& s) {
    std::vector<Windmill> out;
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& vr = s.segments[i];
        if (vr.orientation != Orientation::vertical) continue;
        const int r = static_cast<int>(i);
        // P2: right side's top end on the top side, top's left end on the left
        // side, left's bottom end on the bottom side, bottom's right end on the right side.
        if (const int t = vr.host_hi; is_internal(s, t)) {
            if (const int l = seg(s, t).host_lo; is_internal(s, l)) {
                if (const int b = seg(s, l).host_lo; is_internal(s, b) && seg(s, b).host_hi == r) {
                    out.push_back({PatternId::P2, t, r, b, l,
                                   Rect{seg(s, l).coord, seg(s, b).coord, vr.coord, seg(s, t).coord}});
                }
            }
        }
        // P1: the mirror image.
        if (const int b = vr.host_lo; is_internal(s, b)) {
            if (const int l = seg(s, b).host_lo; is_internal(s, l)) {
                if (const int t = seg(s, l).host_hi; is_internal(s, t) && seg(s, t).host_hi == r) {
                    out.push_back({PatternId::P1, t, r, b, l,
                                   Rect{seg(s, l).coord, seg(s, b).coord, vr.coord, seg(s, t).coord}});
                }
            }
        }
    }
    return out;
}

std::optional<PatternWitness> find_pattern(const SegmentStructure& s, PatternId p) {
    switch (p) {
        case PatternId::P1:
        case PatternId::P2:
            return find_windmill(s, p);
        case PatternId::P3:
            return find_p3(s);
        case PatternId::P4:
            return find_p4(s);
        case PatternId::P5:
            return find_p5(s);
        case PatternId::P6:
            return find_p6(s);
        case PatternId::P7:
            return find_p7(s);
        case PatternId::P8:
            return find_p8(s);
    }
    throw std::invalid_argument("find_pattern: unknown pattern id");
}

bool contains_pattern(const SegmentStructure& s, PatternId p) { return find_pattern(s, p).has_value(); }

bool contains_pattern(const Drawing& d, PatternId p) { return contains_pattern(extract_segments(d), p); }

bool avoids(const SegmentStructure& s, PatternSet ps) {
    for (PatternId p : ps.ids()) {
        if (contains_pattern(s, p)) return false;
    }
    return true;
}

bool avoids(const Drawing& d, PatternSet ps) { return avoids(extract_segments(d), ps); }

std::optional<Cut> find_cut(const SegmentStructure& s) {
    std::optional<Cut> best;
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation == Orientation::vertical && g.host_lo == SegmentStructure::south &&
            g.host_hi == SegmentStructure::north) {
            if (!best || best->orientation != Orientation::vertical || g.coord < best->coord) {
                best = Cut{static_cast<int>(i), Orientation::vertical, g.coord};
            }
        }
    }
    if (best) return best;
    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        const Segment& g = s.segments[i];
        if (g.orientation == Orientation::horizontal && g.host_lo == SegmentStructure::west &&
            g.host_hi == SegmentStructure::east) {
            if (!best || g.coord < best->coord) best = Cut{static_cast<int>(i), Orientation::horizontal, g.coord};
        }
    }
    return best;
}

std::optional<Cut> find_cut(const Drawing& d) { return find_cut(extract_segments(d)); }

Drawing sub_drawing(const Drawing& d, const Rect& window) {
    Drawing out{window.width(), window.height(), {}};
    for (const Rect& r : d.rects) {
        if (r.x_lo >= window.x_lo && r.x_hi <= window.x_hi && r.y_lo >= window.y_lo && r.y_hi <= window.y_hi) {
            out.rects.push_back({r.x_lo - window.x_lo, r.y_lo - window.y_lo, r.x_hi - window.x_lo,
                                 r.y_hi - window.y_lo});
        }
    }
    return out;
}

bool is_guillotine(const Drawing& d) {
    if (d.size() == 1) return true;
    const auto cut = find_cut(d);
    if (!cut) return false;
    Rect a{0, 0, d.width, d.height};
    Rect b = a;
    if (cut->orientation == Orientation::vertical) {
        a.x_hi = cut->coord;
        b.x_lo = cut->coord;
    } else {
        a.y_hi = cut->coord;
        b.y_lo = cut->coord;
    }
    return is_guillotine(sub_drawing(d, a)) && is_guillotine(sub_drawing(d, b));
}

bool is_diagonal(const Drawing& d) { return avoids(d, PatternSet{PatternId::P3, PatternId::P4}); }

}  // namespace rectlab
