#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectlab/geometry.hpp"
#include "rectlab/permutations.hpp"
#include "rectlab/table.hpp"

namespace rectlab {

/// Which cut orientation produces direct sums, and whether blocks are read
/// against the NW-to-SE order (left-to-right / top-to-bottom).
struct DeltaConvention {
    Orientation direct_sum_cut = Orientation::vertical;
    bool reversed = false;

    bool operator==(const DeltaConvention&) const = default;
    std::string str() const;
};

/// The convention fixed by calibration against the pattern translations.
inline constexpr DeltaConvention calibrated_convention{};

std::vector<DeltaConvention> all_conventions();

/// Guillotine diagonal drawing to separable permutation. Throws
/// std::invalid_argument on non-guillotine or non-diagonal input.
Permutation delta(const Drawing& d, DeltaConvention conv = calibrated_convention);

/// Staircase drawing on an n x n grid; rectangle i contains diagonal cell i
/// and corresponds to position i. Throws NotSeparable.
Drawing delta_inv(const Permutation& p, DeltaConvention conv = calibrated_convention);

/// Depth of the recursive cut decomposition (parallel cuts grouped).
int cut_tree_depth(const Drawing& d);

struct TranslationResult {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<Drawing> witness;
    std::optional<Permutation> witness_permutation;
    bool geometric_avoids = false;
    bool permutation_avoids = false;
};

/// For every guillotine diagonal drawing in `classes`: geometric avoidance of
/// the row's patterns equals avoidance of its permutation patterns by delta.
TranslationResult check_translation(const TableRow& row, const std::vector<Drawing>& classes,
                                    DeltaConvention conv = calibrated_convention);
/// Same over delta_inv images of all separable permutations of size n.
TranslationResult check_translation(const TableRow& row, int n, DeltaConvention conv = calibrated_convention);

}  // namespace rectlab
