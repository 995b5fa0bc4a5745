#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rectlab/geometry.hpp"

namespace rectlab {

enum class PatternId : std::uint8_t { P1 = 1, P2, P3, P4, P5, P6, P7, P8 };

/// Set of pattern ids, bit i-1 for Pi.
class PatternSet {
public:
    constexpr PatternSet() = default;
    constexpr explicit PatternSet(std::uint8_t bits) : bits_(bits) {}
    PatternSet(std::initializer_list<PatternId> ids);

    /// Parses a digit string such as "12345" (each digit 1..8 at most once).
    static PatternSet parse(std::string_view digits);
    static constexpr PatternSet all() { return PatternSet(0xFF); }

    bool contains(PatternId p) const { return (bits_ >> (static_cast<int>(p) - 1)) & 1U; }
    bool includes(PatternSet other) const { return (bits_ & other.bits_) == other.bits_; }
    PatternSet with(PatternId p) const { return PatternSet(static_cast<std::uint8_t>(bits_ | (1U << (static_cast<int>(p) - 1)))); }
    std::uint8_t bits() const { return bits_; }
    std::vector<PatternId> ids() const;
    std::string digits() const;
    bool operator==(const PatternSet&) const = default;

private:
    std::uint8_t bits_ = 0;
};

inline constexpr PatternSet guillotine_diagonal_set{0x0F};  // P1..P4
inline constexpr PatternSet vortex_set{0xFD};               // all but P2

struct PatternWitness {
    PatternId pattern;
    std::vector<int> segments;  // participating segment indices
    std::string description;
};

/// Four segments forming a pinwheel around a rectangular interior.
struct Windmill {
    PatternId orientation;  // P1 or P2
    int top = -1;
    int right = -1;
    int bottom = -1;
    int left = -1;
    Rect interior;
};

std::vector<Windmill> find_windmills(const SegmentStructure& s);

std::optional<PatternWitness> find_pattern(const SegmentStructure& s, PatternId p);
bool contains_pattern(const SegmentStructure& s, PatternId p);
bool contains_pattern(const Drawing& d, PatternId p);
bool avoids(const SegmentStructure& s, PatternSet ps);
bool avoids(const Drawing& d, PatternSet ps);

struct Cut {
    int segment = -1;
    Orientation orientation = Orientation::vertical;
    int coord = 0;
};

/// Leftmost vertical cut, else bottom-most horizontal cut.
std::optional<Cut> find_cut(const SegmentStructure& s);
std::optional<Cut> find_cut(const Drawing& d);

bool is_guillotine(const Drawing& d);
bool is_diagonal(const Drawing& d);

/// Rectangles inside [x_lo,x_hi] x [y_lo,y_hi], translated to the origin.
Drawing sub_drawing(const Drawing& d, const Rect& window);

std::string to_string(PatternId p);

}  // namespace rectlab
