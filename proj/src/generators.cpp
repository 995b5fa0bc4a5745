#include "rectlab/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "rectlab/bijection.hpp"

namespace rectlab {

// ---------------------------------------------------------------------------
// Oracle enumeration

namespace {

struct TilingSearch {
    int n;
    int width;
    int height;
    std::vector<int> owner;  // cell -> rect id, -1 empty
    std::vector<Rect> rects;
    std::unordered_map<std::string, Drawing>* found;

    int& at(int x, int y) { return owner[static_cast<std::size_t>(y * width + x)]; }

    bool tight() const {
        std::vector<bool> xs(static_cast<std::size_t>(width + 1), false);
        std::vector<bool> ys(static_cast<std::size_t>(height + 1), false);
        for (const Rect& r : rects) {
            xs[static_cast<std::size_t>(r.x_lo)] = true;
            ys[static_cast<std::size_t>(r.y_lo)] = true;
        }
        for (int x = 1; x < width; ++x) {
            if (!xs[static_cast<std::size_t>(x)]) return false;
        }
        for (int y = 1; y < height; ++y) {
            if (!ys[static_cast<std::size_t>(y)]) return false;
        }
        return true;
    }

    bool no_four_corner() {
        for (int y = 1; y < height; ++y) {
            for (int x = 1; x < width; ++x) {
                const int a = at(x - 1, y - 1);
                const int b = at(x, y - 1);
                const int c = at(x - 1, y);
                const int d = at(x, y);
                if (a != b && a != c && a != d && b != c && b != d && c != d) return false;
            }
        }
        return true;
    }

    void run(int cell) {
        const int total = width * height;
        while (cell < total && owner[static_cast<std::size_t>(cell)] >= 0) ++cell;
        const int placed = static_cast<int>(rects.size());
        if (cell == total) {
            if (placed == n && tight() && no_four_corner()) {
                Drawing d{width, height, rects};
                auto code = canonicalize(d).code;
                found->try_emplace(std::move(code), normalized_order(std::move(d)));
            }
            return;
        }
        if (placed == n) return;
        const int x = cell % width;
        const int y = cell / width;
        // The three cells around the lower-left corner are already owned.
        if (x > 0 && y > 0) {
            const int a = at(x - 1, y - 1);
            const int b = at(x, y - 1);
            const int c = at(x - 1, y);
            if (a != b && a != c && b != c) return;
        }
        int max_w = 0;
        while (x + max_w < width && at(x + max_w, y) < 0) ++max_w;
        for (int w = 1; w <= max_w; ++w) {
            for (int h = 1; y + h <= height; ++h) {
                bool free_row = true;
                for (int i = 0; i < w; ++i) {
                    if (at(x + i, y + h - 1) >= 0) {
                        free_row = false;
                        break;
                    }
                }
                if (!free_row) break;
                for (int j = 0; j < h; ++j) {
                    for (int i = 0; i < w; ++i) at(x + i, y + j) = placed;
                }
                rects.push_back({x, y, x + w, y + h});
                run(cell + w);
                rects.pop_back();
                for (int j = 0; j < h; ++j) {
                    for (int i = 0; i < w; ++i) at(x + i, y + j) = -1;
                }
            }
        }
    }
};

}  // namespace

std::vector<RectangulationClass> gen_all_rectangulations(int n, int ceiling) {
    if (n < 1) throw std::invalid_argument("gen_all_rectangulations: n must be positive");
    if (n > ceiling) {
        throw ResourceLimit("oracle enumeration limited to n <= " + std::to_string(ceiling) + ", requested " +
                            std::to_string(n));
    }
    // Shards by grid shape (v+1) x (h+1) with v + h = n - 1, merged in code order.
    std::unordered_map<std::string, Drawing> found;
    for (int v = 0; v < n; ++v) {
        TilingSearch search{n, v + 1, n - v, {}, {}, &found};
        search.owner.assign(static_cast<std::size_t>(search.width * search.height), -1);
        search.run(0);
    }
    std::vector<RectangulationClass> out;
    out.reserve(found.size());
    for (auto& [code, d] : found) out.push_back({CanonicalCode{code}, std::move(d)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    return out;
}

std::vector<Drawing> gen_class(int n, PatternSet avoid, ClassMethod method, int ceiling) {
    if (method == ClassMethod::automatic) {
        method = avoid.includes(guillotine_diagonal_set) ? ClassMethod::bijective : ClassMethod::oracle;
    }
    std::vector<std::pair<CanonicalCode, Drawing>> keep;
    if (method == ClassMethod::bijective) {
        if (!avoid.includes(guillotine_diagonal_set)) {
            throw std::invalid_argument("gen_class: bijective route needs P1..P4 in the avoided set");
        }
        for_each_separable(n, [&](const Permutation& p) {
            Drawing d = delta_inv(p);
            if (avoids(d, avoid)) keep.emplace_back(canonicalize(d), std::move(d));
        });
    } else {
        for (auto& c : gen_all_rectangulations(n, ceiling)) {
            if (avoids(c.drawing, avoid)) keep.emplace_back(c.code, std::move(c.drawing));
        }
    }
    std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Drawing> out;
    out.reserve(keep.size());
    for (auto& [code, d] : keep) out.push_back(std::move(d));
    return out;
}

std::uint64_t count_class(int n, PatternSet avoid, ClassMethod method, int ceiling) {
    if (method == ClassMethod::automatic) {
        method = avoid.includes(guillotine_diagonal_set) ? ClassMethod::bijective : ClassMethod::oracle;
    }
    std::uint64_t count = 0;
    if (method == ClassMethod::bijective) {
        if (!avoid.includes(guillotine_diagonal_set)) {
            throw std::invalid_argument("count_class: bijective route needs P1..P4 in the avoided set");
        }
        for_each_separable(n, [&](const Permutation& p) {
            if (avoids(delta_inv(p), avoid)) ++count;
        });
        return count;
    }
    for (const auto& c : gen_all_rectangulations(n, ceiling)) {
        if (avoids(c.drawing, avoid)) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Generating tree

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
           std::to_string(s[3]) + ")";
}

namespace {

// Rule i sets s_i to a value in its range and increments s_{i+1}.
// Returns the largest admissible value, 0 when the rule does not apply.
int rule_range(const Signature& s, int rule) {
    const auto [a, b, c, d] = s;
    switch (rule) {
        case 1:
            return c == 1 && d == 1 ? 1 : 0;
        case 2:
            return a == 1 && d == 1 ? b : 0;
        case 3:
            return a == 1 ? c : 0;
        case 4:
            return d;
        default:
            return 0;
    }
}

}  // namespace

Signature apply_step(const Signature& s, const TreeStep& step) {
    const int max_value = rule_range(s, step.rule);
    if (max_value == 0) {
        throw std::invalid_argument("rule " + std::to_string(step.rule) + " does not apply to " + to_string(s));
    }
    if (step.value < 1 || step.value > max_value) {
        throw std::invalid_argument("rule " + std::to_string(step.rule) + " value " + std::to_string(step.value) +
                                    " out of range for " + to_string(s));
    }
    Signature out = s;
    const auto i = static_cast<std::size_t>(step.rule - 1);
    out[i] = step.value;
    ++out[(i + 1) % 4];
    return out;
}

std::vector<std::pair<TreeStep, Signature>> tree_children(const Signature& s) {
    std::vector<std::pair<TreeStep, Signature>> out;
    for (int rule = 1; rule <= 4; ++rule) {
        const int m = rule_range(s, rule);
        for (int v = 1; v <= m; ++v) {
            const TreeStep step{rule, v};
            out.emplace_back(step, apply_step(s, step));
        }
    }
    return out;
}

WhirlTreeLevels whirl_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("whirl_tree: negative depth");
    WhirlTreeLevels out;
    std::map<Signature, std::uint64_t> level{{Signature{1, 1, 1, 1}, 1}};
    for (int k = 0;; ++k) {
        std::uint64_t total = 0;
        for (const auto& [sig, mult] : level) total += mult;
        out.sizes.push_back(total);
        out.signatures.push_back(level);
        if (k == depth) break;
        std::map<Signature, std::uint64_t> next;
        for (const auto& [sig, mult] : level) {
            for (const auto& [step, child] : tree_children(sig)) next[child] += mult;
        }
        level = std::move(next);
    }
    return out;
}

std::vector<std::vector<TreeStep>> tree_paths(int depth) {
    if (depth < 0) throw std::invalid_argument("tree_paths: negative depth");
    std::vector<std::pair<std::vector<TreeStep>, Signature>> level{{{}, Signature{1, 1, 1, 1}}};
    for (int k = 0; k < depth; ++k) {
        std::vector<std::pair<std::vector<TreeStep>, Signature>> next;
        for (const auto& [path, sig] : level) {
            for (const auto& [step, child] : tree_children(sig)) {
                auto p = path;
                p.push_back(step);
                next.emplace_back(std::move(p), child);
            }
        }
        level = std::move(next);
    }
    std::vector<std::vector<TreeStep>> out;
    out.reserve(level.size());
    for (auto& [path, sig] : level) out.push_back(std::move(path));
    return out;
}

// ---------------------------------------------------------------------------
// Simple-whirl builder

Drawing pinwheel() {
    return Drawing{3, 3, {{1, 2, 3, 3}, {2, 0, 3, 2}, {0, 0, 2, 1}, {0, 1, 1, 3}, {1, 1, 2, 2}}};
}

namespace {

// New corner rectangle in R1: a unit column along the east side from the
// south side up to H - v; the v top rectangles touching the east side widen.
Drawing add_to_r1(const Drawing& d, int v) {
    const auto corner = std::find_if(d.rects.begin(), d.rects.end(),
                                     [&](const Rect& r) { return r.x_hi == d.width && r.y_lo == 0; });
    if (corner == d.rects.end()) throw std::logic_error("add_to_r1: no south-east corner rectangle");
    const int h_new = d.height - v;
    if (h_new < corner->y_hi) throw std::invalid_argument("add_to_r1: corner would shrink");
    Drawing out = d;
    for (Rect& r : out.rects) {
        if (r.x_hi == d.width && r.y_lo >= h_new) r.x_hi = d.width + 1;
    }
    out.rects.push_back({d.width, 0, d.width + 1, h_new});
    out.width = d.width + 1;
    return out;
}

}  // namespace

Drawing build_simple_whirl(const std::vector<TreeStep>& path) {
    Drawing d = pinwheel();
    Signature sig{1, 1, 1, 1};
    for (const TreeStep& step : path) {
        sig = apply_step(sig, step);
        for (int k = 1; k < step.rule; ++k) d = rotate_ccw(d);
        d = add_to_r1(d, step.value);
        for (int k = 1; k < step.rule; ++k) d = rotate_cw(d);
    }
    return normalized_order(std::move(d));
}

// ---------------------------------------------------------------------------
// Whirl predicates and peeling

bool is_vortex(const SegmentStructure& s) { return avoids(s, vortex_set); }

bool is_whirl(const SegmentStructure& s) { return is_vortex(s) && contains_pattern(s, PatternId::P2); }

bool is_peelable(const Drawing& d) {
    if (d.size() <= 1) return false;
    return std::any_of(d.rects.begin(), d.rects.end(), [&](const Rect& r) {
        return (r.x_lo == 0 && r.x_hi == d.width) || (r.y_lo == 0 && r.y_hi == d.height);
    });
}

bool is_simple_whirl(const Drawing& d) {
    const SegmentStructure s = extract_segments(d);
    if (!is_vortex(s) || is_peelable(d)) return false;
    const auto ws = find_windmills(s);
    if (ws.size() != 1 || ws[0].orientation != PatternId::P2) return false;
    return std::find(d.rects.begin(), d.rects.end(), ws[0].interior) != d.rects.end();
}

namespace {

// Deletes r and closes the gap it leaves.
Drawing delete_spanning(const Drawing& d, std::size_t i) {
    const Rect r = d.rects[i];
    Drawing out = d;
    out.rects.erase(out.rects.begin() + static_cast<std::ptrdiff_t>(i));
    if (r.x_lo == 0 && r.x_hi == d.width) {
        const int gap = r.height();
        for (Rect& q : out.rects) {
            if (q.y_lo >= r.y_hi) {
                q.y_lo -= gap;
                q.y_hi -= gap;
            }
        }
        out.height -= gap;
    } else {
        const int gap = r.width();
        for (Rect& q : out.rects) {
            if (q.x_lo >= r.x_hi) {
                q.x_lo -= gap;
                q.x_hi -= gap;
            }
        }
        out.width -= gap;
    }
    return out;
}

std::pair<Drawing, int> peel_impl(const Drawing& d) {
    if (!is_whirl(extract_segments(d))) throw std::invalid_argument("peel: input is not a whirl");
    Drawing cur = d;
    int removed = 0;
    while (cur.size() > 1) {
        auto it = std::find_if(cur.rects.begin(), cur.rects.end(), [&](const Rect& r) {
            return (r.x_lo == 0 && r.x_hi == cur.width) || (r.y_lo == 0 && r.y_hi == cur.height);
        });
        if (it == cur.rects.end()) break;
        cur = delete_spanning(cur, static_cast<std::size_t>(it - cur.rects.begin()));
        ++removed;
    }
    return {normalized_order(compress(cur)), removed};
}

}  // namespace

Drawing peel(const Drawing& d) { return peel_impl(d).first; }

int unpeel_count(const Drawing& d) { return peel_impl(d).second; }

// ---------------------------------------------------------------------------
// Regions and signatures

namespace {

struct CellGrid {
    int width;
    int height;
    // blocked_v[y * (width + 1) + x]: unit edge x, [y, y+1]
    std::vector<bool> blocked_v;
    // blocked_h[y * width + x]: unit edge [x, x+1], y
    std::vector<bool> blocked_h;

    CellGrid(int w, int h)
        : width(w),
          height(h),
          blocked_v(static_cast<std::size_t>((w + 1) * h), false),
          blocked_h(static_cast<std::size_t>(w * (h + 1)), false) {}

    void block_vertical(int x, int y0, int y1) {
        for (int y = std::min(y0, y1); y < std::max(y0, y1); ++y) {
            blocked_v[static_cast<std::size_t>(y * (width + 1) + x)] = true;
        }
    }
    void block_horizontal(int y, int x0, int x1) {
        for (int x = std::min(x0, x1); x < std::max(x0, x1); ++x) {
            blocked_h[static_cast<std::size_t>(y * width + x)] = true;
        }
    }
};

enum class Dir { up, down, left, right };

// Follows segments from `start` at `pos`, turning onto the host of the end
// reached and alternating direction, until a boundary segment is reached.
void trace_path(const SegmentStructure& s, int start, int pos, Dir first, Dir second, CellGrid& grid) {
    int cur = start;
    Dir dir = first;
    for (std::size_t guard = 0; guard <= s.segments.size(); ++guard) {
        const Segment& g = s.segments[static_cast<std::size_t>(cur)];
        if (g.is_boundary()) return;
        const bool forward = dir == Dir::up || dir == Dir::right;
        const int end = forward ? g.hi : g.lo;
        if (g.orientation == Orientation::vertical) {
            grid.block_vertical(g.coord, pos, end);
        } else {
            grid.block_horizontal(g.coord, pos, end);
        }
        pos = g.coord;
        cur = forward ? g.host_hi : g.host_lo;
        dir = dir == first ? second : first;
    }
    throw std::runtime_error("whirl regions: alternating path does not terminate");
}

}  // namespace

WhirlRegions whirl_regions(const Drawing& input) {
    const Drawing d = compress(input);
    const SegmentStructure s = extract_segments(d);
    std::vector<Windmill> ws;
    for (const Windmill& w : find_windmills(s)) {
        if (w.orientation == PatternId::P2) ws.push_back(w);
    }
    if (ws.size() != 1) throw std::runtime_error("whirl regions: expected exactly one windmill");
    const Windmill w = ws[0];
    const int xl = w.interior.x_lo;
    const int xr = w.interior.x_hi;
    const int yb = w.interior.y_lo;
    const int yt = w.interior.y_hi;

    CellGrid grid(d.width, d.height);
    trace_path(s, w.right, yb, Dir::down, Dir::right, grid);
    trace_path(s, w.top, xr, Dir::right, Dir::up, grid);
    trace_path(s, w.left, yt, Dir::up, Dir::left, grid);
    trace_path(s, w.bottom, xl, Dir::left, Dir::down, grid);
    grid.block_vertical(xl, yb, yt);
    grid.block_vertical(xr, yb, yt);
    grid.block_horizontal(yb, xl, xr);
    grid.block_horizontal(yt, xl, xr);

    const auto cell_index = [&](int x, int y) { return static_cast<std::size_t>(y * d.width + x); };
    std::vector<int> label(static_cast<std::size_t>(d.width * d.height), -1);
    for (int y = yb; y < yt; ++y) {
        for (int x = xl; x < xr; ++x) label[cell_index(x, y)] = 0;
    }
    const std::array<std::pair<int, int>, 4> seeds{{{xr, yb}, {xl, yb - 1}, {xl - 1, yt - 1}, {xr - 1, yt}}};
    for (int region = 1; region <= 4; ++region) {
        const auto [sx, sy] = seeds[static_cast<std::size_t>(region - 1)];
        if (sx < 0 || sy < 0 || sx >= d.width || sy >= d.height) {
            throw std::runtime_error("whirl regions: seed cell outside R");
        }
        if (label[cell_index(sx, sy)] != -1) throw std::runtime_error("whirl regions: regions are not separated");
        std::deque<std::pair<int, int>> queue{{sx, sy}};
        label[cell_index(sx, sy)] = region;
        while (!queue.empty()) {
            const auto [x, y] = queue.front();
            queue.pop_front();
            const auto visit = [&](int nx, int ny, bool blocked) {
                if (blocked || nx < 0 || ny < 0 || nx >= d.width || ny >= d.height) return;
                int& l = label[cell_index(nx, ny)];
                if (l == region) return;
                if (l != -1) throw std::runtime_error("whirl regions: regions are not separated");
                l = region;
                queue.emplace_back(nx, ny);
            };
            visit(x - 1, y, grid.blocked_v[static_cast<std::size_t>(y * (d.width + 1) + x)]);
            visit(x + 1, y, grid.blocked_v[static_cast<std::size_t>(y * (d.width + 1) + x + 1)]);
            visit(x, y - 1, grid.blocked_h[static_cast<std::size_t>(y * d.width + x)]);
            visit(x, y + 1, grid.blocked_h[static_cast<std::size_t>((y + 1) * d.width + x)]);
        }
    }

    // Compression keeps rectangle order, so ids line up with the input.
    WhirlRegions out{w, {}};
    for (const Rect& r : d.rects) {
        const int l = label[cell_index(r.x_lo, r.y_lo)];
        for (int y = r.y_lo; y < r.y_hi; ++y) {
            for (int x = r.x_lo; x < r.x_hi; ++x) {
                if (label[cell_index(x, y)] != l) throw std::runtime_error("whirl regions: rectangle split by a path");
            }
        }
        if (l < 0) throw std::runtime_error("whirl regions: rectangle outside every region");
        out.region.push_back(l);
    }
    return out;
}

Signature signature_of(const Drawing& input) {
    const Drawing d = compress(input);
    const WhirlRegions wr = whirl_regions(d);
    Signature sig{0, 0, 0, 0};
    for (std::size_t i = 0; i < d.rects.size(); ++i) {
        const Rect& r = d.rects[i];
        switch (wr.region[i]) {
            case 4:
                if (r.x_hi == d.width) ++sig[0];
                break;
            case 1:
                if (r.y_lo == 0) ++sig[1];
                break;
            case 2:
                if (r.x_lo == 0) ++sig[2];
                break;
            case 3:
                if (r.y_hi == d.height) ++sig[3];
                break;
            default:
                break;
        }
    }
    return sig;
}

bool windmills_nested(const Drawing& d) {
    const auto ws = find_windmills(extract_segments(d));
    const auto inside = [](const Rect& a, const Rect& b) {
        return b.x_lo <= a.x_lo && a.x_hi <= b.x_hi && b.y_lo <= a.y_lo && a.y_hi <= b.y_hi;
    };
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            if (!inside(ws[i].interior, ws[j].interior) && !inside(ws[j].interior, ws[i].interior)) return false;
        }
    }
    return true;
}

}  // namespace rectlab

namespace rectlab {

bool is_empty_interior_whirl(const Drawing& d) {
    const SegmentStructure s = extract_segments(d);
    if (!is_vortex(s)) return false;
    const auto ws = find_windmills(s);
    if (ws.size() != 1 || ws[0].orientation != PatternId::P2) return false;
    return std::find(d.rects.begin(), d.rects.end(), ws[0].interior) != d.rects.end();
}

Drawing collapse_interior(const Drawing& d, const Rect& interior) {
    Drawing out{d.width, d.height, {}};
    for (const Rect& r : d.rects) {
        const bool inside = interior.x_lo <= r.x_lo && r.x_hi <= interior.x_hi && interior.y_lo <= r.y_lo &&
                            r.y_hi <= interior.y_hi;
        if (!inside) out.rects.push_back(r);
    }
    out.rects.push_back(interior);
    return normalized_order(std::move(out));
}

std::optional<Windmill> innermost_windmill(const SegmentStructure& s) {
    std::optional<Windmill> best;
    for (const Windmill& w : find_windmills(s)) {
        const long area = static_cast<long>(w.interior.width()) * w.interior.height();
        if (!best || area < static_cast<long>(best->interior.width()) * best->interior.height()) best = w;
    }
    return best;
}

std::vector<std::uint64_t> compose_vortex_counts(const std::vector<std::uint64_t>& p,
                                                 const std::vector<std::uint64_t>& z, int N) {
    const auto at = [](const std::vector<std::uint64_t>& v, int k) -> std::uint64_t {
        return k >= 0 && k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0;
    };
    // W = 1 / (1 - P/t): w_0 = 1, w_k = sum_j p_{j+1} w_{k-j}.
    std::vector<std::uint64_t> w(static_cast<std::size_t>(N) + 1, 0);
    w[0] = 1;
    for (int k = 1; k <= N; ++k) {
        for (int j = 1; j <= k; ++j) w[static_cast<std::size_t>(k)] += at(p, j + 1) * w[static_cast<std::size_t>(k - j)];
    }
    std::vector<std::uint64_t> v(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= N; ++n) {
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(n)] += w[static_cast<std::size_t>(k)] * at(z, n - k);
    }
    return v;
}

}  // namespace rectlab
