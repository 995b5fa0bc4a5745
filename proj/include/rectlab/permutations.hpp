#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rectlab {

/// One-line notation of a permutation of 1..n.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `values` is a permutation of 1..n, n >= 1.
    explicit Permutation(std::vector<int> values);

    /// "2143" (single digits) or "2 1 4 3" / "2,1,4,3" for n > 9.
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }
    std::string str() const;

    Permutation reverse() const;
    Permutation complement() const;
    Permutation reverse_complement() const { return reverse().complement(); }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Classical pattern plus adjacency constraints: adjacent[i] requires pattern
/// positions i and i+1 to be matched by consecutive host positions.
class VincularPattern {
public:
    VincularPattern() = default;
    VincularPattern(Permutation pattern, std::vector<bool> adjacent);
    explicit VincularPattern(Permutation classical);

    /// "2[14]3": brackets group letters that must occupy adjacent positions.
    static VincularPattern parse(std::string_view text);

    const Permutation& pattern() const { return pattern_; }
    const std::vector<bool>& adjacent() const { return adjacent_; }
    int size() const { return pattern_.size(); }
    bool classical() const;
    std::string str() const;

    bool operator==(const VincularPattern&) const = default;

private:
    Permutation pattern_;
    std::vector<bool> adjacent_;  // size() - 1 flags
};

/// Occurrence as host positions (0-based), empty when absent.
std::vector<int> find_vincular(const Permutation& p, const VincularPattern& q);
bool contains_vincular(const Permutation& p, const VincularPattern& q);
bool avoids_all(const Permutation& p, const std::vector<VincularPattern>& qs);

/// Maximal-block separable tree. Ascending nodes have leaf / descending
/// children and vice versa.
struct SeparableTree {
    enum class Kind { leaf, ascending, descending };
    Kind kind = Kind::leaf;
    std::vector<SeparableTree> children;

    int size() const;
    int depth() const;
    bool operator==(const SeparableTree&) const = default;
};

class NotSeparable : public std::runtime_error {
public:
    NotSeparable(const std::string& what, Permutation block)
        : std::runtime_error(what), block_(std::move(block)) {}
    /// The (normalized) sub-block that admits no sum decomposition.
    const Permutation& block() const { return block_; }

private:
    Permutation block_;
};

bool is_separable(const Permutation& p);
/// Throws NotSeparable naming the indecomposable block.
SeparableTree decompose(const Permutation& p);
Permutation flatten(const SeparableTree& t);

/// All separable permutations of size n in lexicographic order.
std::vector<Permutation> generate_separable(int n);
/// Visits the same sequence in the same order.
void for_each_separable(int n, const std::function<void(const Permutation&)>& visit);

/// Separable permutations of size n avoiding every pattern.
std::uint64_t count_avoiders(int n, const std::vector<VincularPattern>& patterns);

}  // namespace rectlab
