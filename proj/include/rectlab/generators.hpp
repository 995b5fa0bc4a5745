#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectlab/geometry.hpp"
#include "rectlab/patterns.hpp"
#include "rectlab/permutations.hpp"

namespace rectlab {

/// Raised when a request exceeds a configured exhaustive-search ceiling.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int default_oracle_ceiling = 8;

struct RectangulationClass {
    CanonicalCode code;
    Drawing drawing;  // tight representative
};

/// Every strong-equivalence class of size n exactly once, sorted by code.
/// Brute force over tight grid tilings; throws ResourceLimit above `ceiling`.
std::vector<RectangulationClass> gen_all_rectangulations(int n, int ceiling = default_oracle_ceiling);

enum class ClassMethod { automatic, bijective, oracle };

/// Classes of size n avoiding `avoid`. The bijective route (delta_inv over
/// separable permutations) requires avoid to contain P1..P4.
std::vector<Drawing> gen_class(int n, PatternSet avoid, ClassMethod method = ClassMethod::automatic,
                               int ceiling = default_oracle_ceiling);
std::uint64_t count_class(int n, PatternSet avoid, ClassMethod method = ClassMethod::automatic,
                          int ceiling = default_oracle_ceiling);

// Whirls.

using Signature = std::array<int, 4>;

std::string to_string(const Signature& s);

struct TreeStep {
    int rule = 0;   // 1..4
    int value = 1;  // chosen value of the fanned-out component
    bool operator==(const TreeStep&) const = default;
};

/// Children of a generating-tree node in rule order, fanned-out values ascending.
std::vector<std::pair<TreeStep, Signature>> tree_children(const Signature& s);
Signature apply_step(const Signature& s, const TreeStep& step);  // throws on an inapplicable rule

struct WhirlTreeLevels {
    std::vector<std::uint64_t> sizes;                            // per depth
    std::vector<std::map<Signature, std::uint64_t>> signatures;  // multiset per depth
};

WhirlTreeLevels whirl_tree(int depth);
/// All root-to-node paths at the given depth, in BFS order.
std::vector<std::vector<TreeStep>> tree_paths(int depth);

/// The size-5 pinwheel in its normalized embedding.
Drawing pinwheel();
Drawing build_simple_whirl(const std::vector<TreeStep>& path);

bool is_vortex(const SegmentStructure& s);
bool is_whirl(const SegmentStructure& s);
bool is_peelable(const Drawing& d);
bool is_simple_whirl(const Drawing& d);
/// Deletes rectangles spanning R until none remain. Throws on non-whirls.
Drawing peel(const Drawing& d);
/// Number of rectangles deleted by peel.
int unpeel_count(const Drawing& d);

struct WhirlRegions {
    Windmill windmill;
    std::vector<int> region;  // per rectangle: 1..4, or 0 inside the windmill interior
};

/// Regions R1..R4 cut out by the four alternating paths of the unique P2
/// windmill. Throws std::runtime_error when the decomposition fails.
WhirlRegions whirl_regions(const Drawing& d);
Signature signature_of(const Drawing& d);

/// True when every pair of windmill interiors is nested.
bool windmills_nested(const Drawing& d);

/// Whirl with exactly one windmill whose interior is a single rectangle
/// (peelable or not).
bool is_empty_interior_whirl(const Drawing& d);
/// Replaces everything inside `interior` by one rectangle.
Drawing collapse_interior(const Drawing& d, const Rect& interior);
/// Innermost windmill (smallest interior), if any.
std::optional<Windmill> innermost_windmill(const SegmentStructure& s);

/// Counts v_1..v_N of V = Z / (1 - P/t) from counts p_n of empty-interior
/// whirls and z_n of all-avoiding classes (index 0 unused).
std::vector<std::uint64_t> compose_vortex_counts(const std::vector<std::uint64_t>& p,
                                                 const std::vector<std::uint64_t>& z, int N);

}  // namespace rectlab
