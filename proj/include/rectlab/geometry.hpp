#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace rectlab {

/// Axis-aligned rectangle with integer corners, y axis pointing up.
struct Rect {
    int x_lo = 0;
    int y_lo = 0;
    int x_hi = 0;
    int y_hi = 0;

    int width() const { return x_hi - x_lo; }
    int height() const { return y_hi - y_lo; }
    auto operator<=>(const Rect&) const = default;
};

/// A concrete tiling of [0,width] x [0,height] by rectangles.
struct Drawing {
    int width = 1;
    int height = 1;
    std::vector<Rect> rects;

    std::size_t size() const { return rects.size(); }
    bool operator==(const Drawing&) const = default;
};

struct Violation {
    enum class Kind { empty, degenerate, out_of_bounds, overlap, gap, four_corner };
    Kind kind;
    std::vector<int> rects;  // offending rectangle ids
    int x = 0;
    int y = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_drawing(const Drawing& d);

enum class Orientation { horizontal, vertical };

/// Side of a host segment on which an attached segment or rectangle lies.
/// Vertical hosts use left/right, horizontal hosts use below/above.
enum class Side { left, right, below, above };

enum class Boundary { none, north, east, south, west };

/// A perpendicular segment whose endpoint lies in the interior of the host.
struct Attachment {
    int segment = -1;
    Side side = Side::left;
    int position = 0;  // coordinate along the host
};

struct Segment {
    Orientation orientation = Orientation::horizontal;
    int coord = 0;  // y for horizontal, x for vertical
    int lo = 0;     // span along the segment
    int hi = 0;
    Boundary boundary = Boundary::none;
    // Host segments of the two endpoints (-1 for the boundary pseudo-segments,
    // whose endpoints are corners of R).
    int host_lo = -1;
    int host_hi = -1;
    // Attachments sorted by ascending position.
    std::vector<Attachment> attachments;
    // Incident rectangles on the low side (left / below) and high side
    // (right / above), sorted by ascending position.
    std::array<std::vector<int>, 2> rects;

    bool is_boundary() const { return boundary != Boundary::none; }
    bool has_attachment_on(Side s) const;
};

/// Maximal-segment structure of a drawing. Indices 0..3 are the boundary
/// pseudo-segments N, E, S, W; internal segments follow.
struct SegmentStructure {
    static constexpr int north = 0;
    static constexpr int east = 1;
    static constexpr int south = 2;
    static constexpr int west = 3;

    int width = 0;
    int height = 0;
    std::vector<Segment> segments;
    // For each rectangle: segment indices of its top, right, bottom, left sides.
    std::vector<std::array<int, 4>> rect_sides;

    std::size_t internal_count() const { return segments.size() - 4; }
};

/// Throws std::invalid_argument when the drawing is not a valid rectangulation.
SegmentStructure extract_segments(const Drawing& d);

/// Canonical incidence code of the strong-equivalence class.
struct CanonicalCode {
    std::string code;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonicalize(const Drawing& d);
CanonicalCode canonicalize(const SegmentStructure& s);
bool equivalent(const Drawing& a, const Drawing& b);

// Coordinate transforms; all map valid drawings to valid drawings.
Drawing rotate_cw(const Drawing& d);
Drawing rotate_ccw(const Drawing& d);
Drawing mirror_x(const Drawing& d);
Drawing mirror_y(const Drawing& d);
/// Replace coordinates by their ranks among the used grid lines.
Drawing compress(const Drawing& d);
/// Stable order of rectangles (by lower-left corner) so that equal tilings compare equal.
Drawing normalized_order(Drawing d);

std::string render_ascii(const Drawing& d);

void to_json(nlohmann::json& j, const Drawing& d);
void from_json(const nlohmann::json& j, Drawing& d);

}  // namespace rectlab
