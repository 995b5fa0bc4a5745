#include "rectlab/permutations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rectlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("permutation: empty");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation: not a permutation of 1.." + std::to_string(size()));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    const bool separated = text.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
        std::string buf(text);
        std::replace(buf.begin(), buf.end(), ',', ' ');
        std::istringstream is(buf);
        int v = 0;
        while (is >> v) values.push_back(v);
        if (!is.eof()) throw std::invalid_argument("permutation: bad token in '" + std::string(text) + "'");
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("permutation: bad digit in '" + std::string(text) + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::string out;
    const bool wide = size() > 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (wide && i > 0) out.push_back(' ');
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::reverse() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complement() const {
    std::vector<int> v = values_;
    for (int& x : v) x = size() + 1 - x;
    return Permutation(std::move(v));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v = a.values();
    for (int x : b.values()) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int x : a.values()) v.push_back(x + b.size());
    for (int x : b.values()) v.push_back(x);
    return Permutation(std::move(v));
}

VincularPattern::VincularPattern(Permutation pattern, std::vector<bool> adjacent)
    : pattern_(std::move(pattern)), adjacent_(std::move(adjacent)) {
    if (adjacent_.size() + 1 != static_cast<std::size_t>(pattern_.size())) {
        throw std::invalid_argument("vincular pattern: adjacency flags must number size-1");
    }
}

VincularPattern::VincularPattern(Permutation classical)
    : pattern_(std::move(classical)), adjacent_(static_cast<std::size_t>(pattern_.size() - 1), false) {}

VincularPattern VincularPattern::parse(std::string_view text) {
    std::vector<int> values;
    std::vector<bool> adjacent;
    bool open = false;
    bool first_in_group = false;
    for (char c : text) {
        if (c == '[') {
            if (open) throw std::invalid_argument("vincular pattern: nested '['");
            open = true;
            first_in_group = true;
        } else if (c == ']') {
            if (!open) throw std::invalid_argument("vincular pattern: unmatched ']'");
            open = false;
        } else if (c >= '1' && c <= '9') {
            if (!values.empty()) adjacent.push_back(open && !first_in_group);
            values.push_back(c - '0');
            first_in_group = false;
        } else {
            throw std::invalid_argument("vincular pattern: bad character in '" + std::string(text) + "'");
        }
    }
    if (open) throw std::invalid_argument("vincular pattern: unclosed '['");
    return VincularPattern(Permutation(std::move(values)), std::move(adjacent));
}

bool VincularPattern::classical() const {
    return std::none_of(adjacent_.begin(), adjacent_.end(), [](bool b) { return b; });
}

std::string VincularPattern::str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        const bool starts = i + 1 < size() && adjacent_[static_cast<std::size_t>(i)] &&
                            (i == 0 || !adjacent_[static_cast<std::size_t>(i - 1)]);
        const bool ends = i > 0 && adjacent_[static_cast<std::size_t>(i - 1)] &&
                          (i + 1 == size() || !adjacent_[static_cast<std::size_t>(i)]);
        if (starts) out.push_back('[');
        out += std::to_string(pattern_[i]);
        if (ends) out.push_back(']');
    }
    return out;
}

namespace {

bool extend(const Permutation& p, const VincularPattern& q, std::vector<int>& chosen) {
    const int j = static_cast<int>(chosen.size());
    if (j == q.size()) return true;
    const int start = j == 0 ? 0 : chosen.back() + 1;
    const int stop = (j > 0 && q.adjacent()[static_cast<std::size_t>(j - 1)]) ? start + 1 : p.size();
    for (int i = start; i < std::min(stop, p.size()); ++i) {
        if (p.size() - i < q.size() - j) break;
        bool ok = true;
        for (int m = 0; m < j && ok; ++m) {
            ok = (p[i] > p[chosen[static_cast<std::size_t>(m)]]) == (q.pattern()[j] > q.pattern()[m]);
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (extend(p, q, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> find_vincular(const Permutation& p, const VincularPattern& q) {
    std::vector<int> chosen;
    if (q.size() <= p.size() && extend(p, q, chosen)) return chosen;
    return {};
}

bool contains_vincular(const Permutation& p, const VincularPattern& q) { return !find_vincular(p, q).empty(); }

bool avoids_all(const Permutation& p, const std::vector<VincularPattern>& qs) {
    return std::none_of(qs.begin(), qs.end(), [&](const VincularPattern& q) { return contains_vincular(p, q); });
}

int SeparableTree::size() const {
    if (kind == Kind::leaf) return 1;
    int n = 0;
    for (const auto& c : children) n += c.size();
    return n;
}

int SeparableTree::depth() const {
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.depth() + 1);
    return d;
}

namespace {

Permutation normalize(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) {
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

SeparableTree decompose_values(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n == 1) return {};
    const Permutation p = normalize(values);
    // Direct-sum split points: prefixes holding exactly the smallest values.
    std::vector<int> cuts;
    int running = 0;
    for (int k = 1; k < n; ++k) {
        running = std::max(running, p[k - 1]);
        if (running == k) cuts.push_back(k);
    }
    SeparableTree::Kind kind = SeparableTree::Kind::ascending;
    if (cuts.empty()) {
        int low = n + 1;
        for (int k = 1; k < n; ++k) {
            low = std::min(low, p[k - 1]);
            if (low == n - k + 1) cuts.push_back(k);
        }
        kind = SeparableTree::Kind::descending;
    }
    if (cuts.empty()) throw NotSeparable("permutation " + p.str() + " is not separable", p);
    cuts.push_back(n);
    SeparableTree t{kind, {}};
    int from = 0;
    for (int to : cuts) {
        std::vector<int> block(p.values().begin() + from, p.values().begin() + to);
        t.children.push_back(decompose_values(block));
        from = to;
    }
    return t;
}

}  // namespace

SeparableTree decompose(const Permutation& p) { return decompose_values(p.values()); }

bool is_separable(const Permutation& p) {
    try {
        decompose(p);
        return true;
    } catch (const NotSeparable&) {
        return false;
    }
}

Permutation flatten(const SeparableTree& t) {
    if (t.kind == SeparableTree::Kind::leaf) return Permutation::identity(1);
    Permutation out = flatten(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i) {
        out = t.kind == SeparableTree::Kind::ascending ? direct_sum(out, flatten(t.children[i]))
                                                       : skew_sum(out, flatten(t.children[i]));
    }
    return out;
}

namespace {

// Memoized ascending / descending separable permutations by size.
class SeparableTables {
public:
    const std::vector<Permutation>& ascending(int n) { return table(n, true); }
    const std::vector<Permutation>& descending(int n) { return table(n, false); }

private:
    const std::vector<Permutation>& table(int n, bool asc) {
        auto& memo = asc ? asc_ : desc_;
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        std::vector<Permutation> out;
        const Permutation one = Permutation::identity(1);
        for (int k = 1; k < n; ++k) {
            // First maximal block: a singleton or a block of the opposite kind.
            std::vector<Permutation> heads;
            if (k == 1) {
                heads.push_back(one);
            } else {
                heads = table(k, !asc);
            }
            std::vector<Permutation> tails;
            if (n - k == 1) {
                tails.push_back(one);
            } else {
                tails = table(n - k, !asc);
                const auto& same = table(n - k, asc);
                tails.insert(tails.end(), same.begin(), same.end());
            }
            for (const auto& h : heads) {
                for (const auto& t : tails) out.push_back(asc ? direct_sum(h, t) : skew_sum(h, t));
            }
        }
        return memo.emplace(n, std::move(out)).first->second;
    }

    std::map<int, std::vector<Permutation>> asc_;
    std::map<int, std::vector<Permutation>> desc_;
};

}  // namespace

std::vector<Permutation> generate_separable(int n) {
    if (n < 1) throw std::invalid_argument("generate_separable: n must be >= 1");
    if (n == 1) return {Permutation::identity(1)};
    SeparableTables tables;
    std::vector<Permutation> out = tables.ascending(n);
    const auto& desc = tables.descending(n);
    out.insert(out.end(), desc.begin(), desc.end());
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_separable(int n, const std::function<void(const Permutation&)>& visit) {
    for (const Permutation& p : generate_separable(n)) visit(p);
}

std::uint64_t count_avoiders(int n, const std::vector<VincularPattern>& patterns) {
    std::uint64_t count = 0;
    for_each_separable(n, [&](const Permutation& p) {
        if (avoids_all(p, patterns)) ++count;
    });
    return count;
}

}  // namespace rectlab
