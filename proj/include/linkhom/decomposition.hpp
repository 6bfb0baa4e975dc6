#ifndef LINKHOM_DECOMPOSITION_HPP
#define LINKHOM_DECOMPOSITION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkhom {

/// Identifies one component of a colored (string) link: the j-th strand
/// carrying color i.  Both fields are 1-based; the global order of
/// components is the lexicographic order on (color, index).
struct ComponentId {
    int color = 0;
    int index = 0;

    friend bool operator==(const ComponentId&, const ComponentId&) = default;
    friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

inline std::string to_string(const ComponentId& c)
{
    return "(" + std::to_string(c.color) + "," + std::to_string(c.index) + ")";
}

/// The tuple (l_1, ..., l_m) recording how many strands carry each color.
/// Strands are numbered globally 0..n-1 in lexicographic (color, index)
/// order; this class converts between global strand numbers and
/// ComponentId pairs.
class ComponentDecomposition {
public:
    ComponentDecomposition() = default;

    explicit ComponentDecomposition(std::vector<int> counts)
        : counts_(std::move(counts))
    {
        if (counts_.empty())
            throw std::invalid_argument("decomposition needs at least one color");
        offsets_.reserve(counts_.size() + 1);
        offsets_.push_back(0);
        for (int c : counts_) {
            if (c < 1)
                throw std::invalid_argument("every color needs at least one strand");
            offsets_.push_back(offsets_.back() + c);
        }
        if (total() > 200)
            throw std::invalid_argument("too many strands");
        color_of_.resize(total());
        for (int i = 0; i < num_colors(); ++i)
            for (int j = offsets_[i]; j < offsets_[i + 1]; ++j)
                color_of_[j] = i + 1;
    }

    int num_colors() const { return static_cast<int>(counts_.size()); }
    int total() const { return offsets_.empty() ? 0 : offsets_.back(); }
    int count(int color) const { return counts_.at(color - 1); }
    const std::vector<int>& counts() const { return counts_; }

    bool valid(const ComponentId& c) const
    {
        return c.color >= 1 && c.color <= num_colors() && c.index >= 1 &&
               c.index <= counts_[c.color - 1];
    }

    void require_valid(const ComponentId& c) const
    {
        if (!valid(c))
            throw std::invalid_argument("component " + to_string(c) +
                                        " out of range for decomposition");
    }

    /// Global strand number (0-based) of a component.
    int strand(const ComponentId& c) const
    {
        require_valid(c);
        return offsets_[c.color - 1] + c.index - 1;
    }

    ComponentId component(int strand) const
    {
        if (strand < 0 || strand >= total())
            throw std::invalid_argument("strand out of range");
        int color = color_of_[strand];
        return ComponentId{color, strand - offsets_[color - 1] + 1};
    }

    /// Color (1-based) carried by a global strand.
    int color_of(int strand) const { return color_of_.at(strand); }

    friend bool operator==(const ComponentDecomposition&,
                           const ComponentDecomposition&) = default;

private:
    std::vector<int> counts_;
    std::vector<int> offsets_;
    std::vector<int> color_of_;
};

/// An ordered sequence of components with pairwise distinct colors.  These
/// index the homotopy invariants: a sequence (c_0 ... c_k) names the
/// coefficient of X_{c_0}...X_{c_{k-1}} in the longitude of c_k.
struct IndexSequence {
    std::vector<ComponentId> entries;

    int level() const { return static_cast<int>(entries.size()) - 1; }

    friend bool operator==(const IndexSequence&, const IndexSequence&) = default;
    friend auto operator<=>(const IndexSequence&, const IndexSequence&) = default;
};

inline std::string to_string(const IndexSequence& s)
{
    std::string out;
    for (const auto& e : s.entries)
        out += to_string(e);
    return out;
}

/// Distinct entries, pairwise distinct colors.
inline bool valid_index_sequence(const IndexSequence& s,
                                 const ComponentDecomposition& l)
{
    if (s.entries.size() < 2)
        return false;
    std::vector<int> colors;
    for (const auto& e : s.entries) {
        if (!l.valid(e))
            return false;
        colors.push_back(e.color);
    }
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

/// Canonical shape on top of validity: the first entry is the minimum of
/// the whole sequence and the last entry is the maximum.  One sequence per
/// choice of support set and interior arrangement.
inline bool canonical_index_sequence(const IndexSequence& s,
                                     const ComponentDecomposition& l)
{
    if (!valid_index_sequence(s, l))
        return false;
    const auto& e = s.entries;
    const ComponentId lo = *std::min_element(e.begin(), e.end());
    const ComponentId hi = *std::max_element(e.begin(), e.end());
    return e.front() == lo && e.back() == hi;
}

/// All canonical sequences of length k+1 over the decomposition, in
/// lexicographic order of their flattened (color, index) entries.  Empty
/// when k+1 exceeds the number of colors.
inline std::vector<IndexSequence>
enumerate_canonical_sequences(const ComponentDecomposition& l, int k)
{
    if (k < 1)
        throw std::invalid_argument("level must be at least 1");
    std::vector<IndexSequence> out;
    const int len = k + 1;
    if (len > l.num_colors())
        return out;

    const int n = l.total();
    // Pick the support as a strictly increasing strand tuple with distinct
    // colors, then permute the interior; sort once at the end for a global
    // lexicographic listing.
    std::vector<int> pick;
    auto emit = [&]() {
        std::vector<int> interior(pick.begin() + 1, pick.end() - 1);
        std::sort(interior.begin(), interior.end());
        do {
            IndexSequence seq;
            seq.entries.push_back(l.component(pick.front()));
            for (int s : interior)
                seq.entries.push_back(l.component(s));
            seq.entries.push_back(l.component(pick.back()));
            out.push_back(std::move(seq));
        } while (std::next_permutation(interior.begin(), interior.end()));
    };
    auto rec = [&](auto&& self, int next, int colors_used_mask) -> void {
        if (static_cast<int>(pick.size()) == len) {
            emit();
            return;
        }
        for (int s = next; s < n; ++s) {
            int bit = 1 << (l.color_of(s) - 1);
            if (colors_used_mask & bit)
                continue;
            pick.push_back(s);
            self(self, s + 1, colors_used_mask | bit);
            pick.pop_back();
        }
    };
    if (l.num_colors() <= 31)
        rec(rec, 0, 0);
    else
        throw std::invalid_argument("too many colors");
    std::sort(out.begin(), out.end());
    return out;
}

/// All canonical sequences across every level, listed level by level.
inline std::vector<IndexSequence>
all_canonical_sequences(const ComponentDecomposition& l)
{
    std::vector<IndexSequence> out;
    for (int k = 1; k + 1 <= l.num_colors(); ++k) {
        auto level = enumerate_canonical_sequences(l, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Number of invariant coordinates of the decomposition.
inline long long invariant_count(const ComponentDecomposition& l)
{
    long long total = 0;
    for (int k = 1; k + 1 <= l.num_colors(); ++k)
        total += static_cast<long long>(enumerate_canonical_sequences(l, k).size());
    return total;
}

} // namespace linkhom

#endif
