#include "rectlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace rectlab {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int rank_of(const std::vector<int>& axis, int value) {
    return static_cast<int>(std::lower_bound(axis.begin(), axis.end(), value) - axis.begin());
}

}  // namespace

bool Segment::has_attachment_on(Side s) const {
    return std::any_of(attachments.begin(), attachments.end(),
                       [s](const Attachment& a) { return a.side == s; });
}

ValidationReport validate_drawing(const Drawing& d) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, std::vector<int> ids, int x, int y, std::string msg) {
        report.violations.push_back({kind, std::move(ids), x, y, std::move(msg)});
    };

    if (d.rects.empty() || d.width <= 0 || d.height <= 0) {
        add(Violation::Kind::empty, {}, 0, 0, "drawing has no rectangles or an empty frame");
        return report;
    }
    for (std::size_t i = 0; i < d.rects.size(); ++i) {
        const Rect& r = d.rects[i];
        const int id = static_cast<int>(i);
        if (r.x_lo >= r.x_hi || r.y_lo >= r.y_hi) {
            add(Violation::Kind::degenerate, {id}, r.x_lo, r.y_lo,
                "rectangle " + std::to_string(id) + " is degenerate");
        }
        if (r.x_lo < 0 || r.y_lo < 0 || r.x_hi > d.width || r.y_hi > d.height) {
            add(Violation::Kind::out_of_bounds, {id}, r.x_lo, r.y_lo,
                "rectangle " + std::to_string(id) + " leaves the frame");
        }
    }
    if (!report.ok()) return report;

    std::vector<int> xs{0, d.width};
    std::vector<int> ys{0, d.height};
    for (const Rect& r : d.rects) {
        xs.push_back(r.x_lo);
        xs.push_back(r.x_hi);
        ys.push_back(r.y_lo);
        ys.push_back(r.y_hi);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));
    const int cols = static_cast<int>(xs.size()) - 1;
    const int rows = static_cast<int>(ys.size()) - 1;
    std::vector<int> owner(static_cast<std::size_t>(cols * rows), -1);
    auto cell = [&](int c, int r) -> int& { return owner[static_cast<std::size_t>(r * cols + c)]; };

    for (std::size_t i = 0; i < d.rects.size(); ++i) {
        const Rect& r = d.rects[i];
        const int c0 = rank_of(xs, r.x_lo), c1 = rank_of(xs, r.x_hi);
        const int r0 = rank_of(ys, r.y_lo), r1 = rank_of(ys, r.y_hi);
        for (int rr = r0; rr < r1; ++rr) {
            for (int cc = c0; cc < c1; ++cc) {
                int& o = cell(cc, rr);
                if (o >= 0) {
                    add(Violation::Kind::overlap, {o, static_cast<int>(i)}, xs[cc], ys[rr],
                        "rectangles " + std::to_string(o) + " and " + std::to_string(i) + " overlap");
                } else {
                    o = static_cast<int>(i);
                }
            }
        }
    }
    for (int rr = 0; rr < rows; ++rr) {
        for (int cc = 0; cc < cols; ++cc) {
            if (cell(cc, rr) < 0) {
                add(Violation::Kind::gap, {}, xs[cc], ys[rr],
                    "uncovered area at (" + std::to_string(xs[cc]) + "," + std::to_string(ys[rr]) + ")");
            }
        }
    }
    if (!report.ok()) return report;

    for (int rr = 1; rr < rows; ++rr) {
        for (int cc = 1; cc < cols; ++cc) {
            std::set<int> around{cell(cc - 1, rr - 1), cell(cc, rr - 1), cell(cc - 1, rr), cell(cc, rr)};
            if (around.size() == 4) {
                add(Violation::Kind::four_corner, {around.begin(), around.end()}, xs[cc], ys[rr],
                    "four rectangles meet at (" + std::to_string(xs[cc]) + "," + std::to_string(ys[rr]) + ")");
            }
        }
    }
    return report;
}

namespace {

struct Interval {
    int lo;
    int hi;
};

// Merge touching or overlapping intervals.
std::vector<Interval> merge(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    for (const Interval& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

}  // namespace

SegmentStructure extract_segments(const Drawing& d) {
    const ValidationReport report = validate_drawing(d);
    if (!report.ok()) {
        throw std::invalid_argument("extract_segments: " + report.violations.front().message);
    }

    SegmentStructure s;
    s.width = d.width;
    s.height = d.height;
    s.segments.resize(4);
    s.segments[SegmentStructure::north] = {Orientation::horizontal, d.height, 0, d.width, Boundary::north};
    s.segments[SegmentStructure::east] = {Orientation::vertical, d.width, 0, d.height, Boundary::east};
    s.segments[SegmentStructure::south] = {Orientation::horizontal, 0, 0, d.width, Boundary::south};
    s.segments[SegmentStructure::west] = {Orientation::vertical, 0, 0, d.height, Boundary::west};

    std::map<int, std::vector<Interval>> hor;
    std::map<int, std::vector<Interval>> ver;
    for (const Rect& r : d.rects) {
        if (r.y_lo > 0) hor[r.y_lo].push_back({r.x_lo, r.x_hi});
        if (r.y_hi < d.height) hor[r.y_hi].push_back({r.x_lo, r.x_hi});
        if (r.x_lo > 0) ver[r.x_lo].push_back({r.y_lo, r.y_hi});
        if (r.x_hi < d.width) ver[r.x_hi].push_back({r.y_lo, r.y_hi});
    }
    // Per coordinate: indices of the segments on that line, sorted by lo.
    std::map<int, std::vector<int>> hor_at;
    std::map<int, std::vector<int>> ver_at;
    for (auto& [y, ivs] : hor) {
        for (const Interval& iv : merge(std::move(ivs))) {
            hor_at[y].push_back(static_cast<int>(s.segments.size()));
            s.segments.push_back({Orientation::horizontal, y, iv.lo, iv.hi, Boundary::none});
        }
    }
    for (auto& [x, ivs] : ver) {
        for (const Interval& iv : merge(std::move(ivs))) {
            ver_at[x].push_back(static_cast<int>(s.segments.size()));
            s.segments.push_back({Orientation::vertical, x, iv.lo, iv.hi, Boundary::none});
        }
    }

    // Segment on a line containing [lo,hi]; boundary lines map to pseudo-segments.
    auto containing = [&](const std::map<int, std::vector<int>>& at, int coord, int lo, int hi,
                          int boundary_lo, int boundary_hi, int limit) -> int {
        if (coord == 0) return boundary_lo;
        if (coord == limit) return boundary_hi;
        for (int idx : at.at(coord)) {
            const Segment& g = s.segments[static_cast<std::size_t>(idx)];
            if (g.lo <= lo && hi <= g.hi) return idx;
        }
        throw std::logic_error("extract_segments: edge not covered by a segment");
    };
    // Segment whose interior contains the point at `pos` on the line `coord`.
    auto through = [&](const std::map<int, std::vector<int>>& at, int coord, int pos,
                       int boundary_lo, int boundary_hi, int limit) -> int {
        if (coord == 0) return boundary_lo;
        if (coord == limit) return boundary_hi;
        auto it = at.find(coord);
        if (it != at.end()) {
            for (int idx : it->second) {
                const Segment& g = s.segments[static_cast<std::size_t>(idx)];
                if (g.lo < pos && pos < g.hi) return idx;
            }
        }
        throw std::logic_error("extract_segments: dangling segment endpoint");
    };

    s.rect_sides.resize(d.rects.size());
    for (std::size_t i = 0; i < d.rects.size(); ++i) {
        const Rect& r = d.rects[i];
        const int top = containing(hor_at, r.y_hi, r.x_lo, r.x_hi, SegmentStructure::south,
                                   SegmentStructure::north, d.height);
        const int bottom = containing(hor_at, r.y_lo, r.x_lo, r.x_hi, SegmentStructure::south,
                                      SegmentStructure::north, d.height);
        const int left = containing(ver_at, r.x_lo, r.y_lo, r.y_hi, SegmentStructure::west,
                                    SegmentStructure::east, d.width);
        const int right = containing(ver_at, r.x_hi, r.y_lo, r.y_hi, SegmentStructure::west,
                                     SegmentStructure::east, d.width);
        s.rect_sides[i] = {top, right, bottom, left};
        const int id = static_cast<int>(i);
        s.segments[static_cast<std::size_t>(top)].rects[0].push_back(id);
        s.segments[static_cast<std::size_t>(bottom)].rects[1].push_back(id);
        s.segments[static_cast<std::size_t>(right)].rects[0].push_back(id);
        s.segments[static_cast<std::size_t>(left)].rects[1].push_back(id);
    }

    for (std::size_t i = 4; i < s.segments.size(); ++i) {
        Segment& g = s.segments[i];
        const int id = static_cast<int>(i);
        if (g.orientation == Orientation::horizontal) {
            g.host_lo = through(ver_at, g.lo, g.coord, SegmentStructure::west, SegmentStructure::east, d.width);
            g.host_hi = through(ver_at, g.hi, g.coord, SegmentStructure::west, SegmentStructure::east, d.width);
            s.segments[static_cast<std::size_t>(g.host_lo)].attachments.push_back({id, Side::right, g.coord});
            s.segments[static_cast<std::size_t>(g.host_hi)].attachments.push_back({id, Side::left, g.coord});
        } else {
            g.host_lo = through(hor_at, g.lo, g.coord, SegmentStructure::south, SegmentStructure::north, d.height);
            g.host_hi = through(hor_at, g.hi, g.coord, SegmentStructure::south, SegmentStructure::north, d.height);
            s.segments[static_cast<std::size_t>(g.host_lo)].attachments.push_back({id, Side::above, g.coord});
            s.segments[static_cast<std::size_t>(g.host_hi)].attachments.push_back({id, Side::below, g.coord});
        }
    }

    for (Segment& g : s.segments) {
        std::sort(g.attachments.begin(), g.attachments.end(),
                  [](const Attachment& a, const Attachment& b) { return a.position < b.position; });
        for (auto& side : g.rects) {
            auto key = [&](int r) {
                const Rect& rr = d.rects[static_cast<std::size_t>(r)];
                return g.orientation == Orientation::horizontal ? rr.x_lo : rr.y_lo;
            };
            std::sort(side.begin(), side.end(), [&](int a, int b) { return key(a) < key(b); });
        }
    }
    return s;
}

CanonicalCode canonicalize(const SegmentStructure& s) {
    // Breadth-first relabelling from the four boundary sides; each segment
    // contributes its attachments in ascending order with side letters.
    std::vector<int> label(s.segments.size(), -1);
    std::vector<int> queue{SegmentStructure::north, SegmentStructure::east, SegmentStructure::south,
                           SegmentStructure::west};
    for (int i = 0; i < 4; ++i) label[static_cast<std::size_t>(i)] = i;
    std::string code;
    code.reserve(s.segments.size() * 8);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const Segment& g = s.segments[static_cast<std::size_t>(queue[q])];
        code.push_back('(');
        for (const Attachment& a : g.attachments) {
            int& l = label[static_cast<std::size_t>(a.segment)];
            if (l < 0) {
                l = static_cast<int>(queue.size());
                queue.push_back(a.segment);
            }
            code.push_back("lrba"[static_cast<int>(a.side)]);
            code += std::to_string(l);
        }
        code.push_back(')');
    }
    if (queue.size() != s.segments.size()) {
        throw std::logic_error("canonicalize: segment graph is not connected to the boundary");
    }
    return {std::move(code)};
}

CanonicalCode canonicalize(const Drawing& d) { return canonicalize(extract_segments(d)); }

bool equivalent(const Drawing& a, const Drawing& b) {
    return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

Drawing rotate_cw(const Drawing& d) {
    Drawing out{d.height, d.width, {}};
    out.rects.reserve(d.rects.size());
    for (const Rect& r : d.rects) {
        out.rects.push_back({r.y_lo, d.width - r.x_hi, r.y_hi, d.width - r.x_lo});
    }
    return out;
}

Drawing rotate_ccw(const Drawing& d) {
    Drawing out{d.height, d.width, {}};
    out.rects.reserve(d.rects.size());
    for (const Rect& r : d.rects) {
        out.rects.push_back({d.height - r.y_hi, r.x_lo, d.height - r.y_lo, r.x_hi});
    }
    return out;
}

Drawing mirror_x(const Drawing& d) {
    Drawing out{d.width, d.height, {}};
    for (const Rect& r : d.rects) out.rects.push_back({d.width - r.x_hi, r.y_lo, d.width - r.x_lo, r.y_hi});
    return out;
}

Drawing mirror_y(const Drawing& d) {
    Drawing out{d.width, d.height, {}};
    for (const Rect& r : d.rects) out.rects.push_back({r.x_lo, d.height - r.y_hi, r.x_hi, d.height - r.y_lo});
    return out;
}

Drawing compress(const Drawing& d) {
    std::vector<int> xs{0, d.width};
    std::vector<int> ys{0, d.height};
    for (const Rect& r : d.rects) {
        xs.push_back(r.x_lo);
        xs.push_back(r.x_hi);
        ys.push_back(r.y_lo);
        ys.push_back(r.y_hi);
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));
    Drawing out{static_cast<int>(xs.size()) - 1, static_cast<int>(ys.size()) - 1, {}};
    for (const Rect& r : d.rects) {
        out.rects.push_back({rank_of(xs, r.x_lo), rank_of(ys, r.y_lo), rank_of(xs, r.x_hi), rank_of(ys, r.y_hi)});
    }
    return out;
}

Drawing normalized_order(Drawing d) {
    std::sort(d.rects.begin(), d.rects.end(), [](const Rect& a, const Rect& b) {
        return std::tie(a.y_lo, a.x_lo) < std::tie(b.y_lo, b.x_lo);
    });
    return d;
}

std::string render_ascii(const Drawing& d) {
    // Each unit cell becomes 2x1 characters; walls are drawn on a doubled grid.
    const int w = d.width * 2 + 1;
    const int h = d.height * 2 + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w) * 2, ' '));
    auto put = [&](int gx, int gy, char c) {
        const auto row = static_cast<std::size_t>(h - 1 - gy);
        canvas[row][static_cast<std::size_t>(gx) * 2] = c;
        if (c == '-') canvas[row][static_cast<std::size_t>(gx) * 2 + 1] = '-';
    };
    for (const Rect& r : d.rects) {
        for (int x = 2 * r.x_lo; x < 2 * r.x_hi; ++x) {
            put(x, 2 * r.y_lo, '-');
            put(x, 2 * r.y_hi, '-');
        }
        for (int y = 2 * r.y_lo; y <= 2 * r.y_hi; ++y) {
            put(2 * r.x_lo, y, '|');
            put(2 * r.x_hi, y, '|');
        }
    }
    for (const Rect& r : d.rects) {
        for (int x : {2 * r.x_lo, 2 * r.x_hi}) {
            for (int y : {2 * r.y_lo, 2 * r.y_hi}) put(x, y, '+');
        }
    }
    std::ostringstream os;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

void to_json(nlohmann::json& j, const Drawing& d) {
    nlohmann::json rects = nlohmann::json::array();
    for (const Rect& r : d.rects) rects.push_back({r.x_lo, r.y_lo, r.x_hi, r.y_hi});
    j = nlohmann::json{{"width", d.width}, {"height", d.height}, {"rects", std::move(rects)}};
}

void from_json(const nlohmann::json& j, Drawing& d) {
    d.width = j.at("width").get<int>();
    d.height = j.at("height").get<int>();
    d.rects.clear();
    for (const auto& r : j.at("rects")) {
        if (r.size() != 4) throw std::invalid_argument("drawing JSON: rectangle needs 4 coordinates");
        d.rects.push_back({r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()});
    }
}

}  // namespace rectlab
