#pragma once

// Exhaustive suffix search: can a set of intermediate outputs be sorted by
// appending k more levels? Used to check filter sets end to end at small n.

#include <snf/levels.hpp>
#include <snf/pipeline.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace snf {

/// Results of finished sub-searches, keyed by (set words, remaining depth).
class SearchMemo {
public:
    using Suffix = std::vector<Level>;

    const std::optional<Suffix> * find(const OutputSet & set, int depth) const;
    void store(const OutputSet & set, int depth, std::optional<Suffix> result);
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::pair<std::vector<Word>, int>, std::optional<Suffix>> entries_;
};

/// A k-level suffix that sorts every vector of `set`, or nullopt when no
/// sequence of k levels does. Pass a null memo to search without caching.
std::optional<Network> dfs_extend(const OutputSet & set, int k, const LevelCatalog & levels, SearchMemo * memo);

struct PrefixVerdict {
    std::size_t index = 0;
    bool extends = false;
};

struct CompletenessReport {
    int target_depth = 0;
    /// Some prefix extends to a network sorting the whole input universe.
    bool exists = false;
    /// prefix + suffix; for the full universe it has passed is_sorting_network.
    std::optional<Network> witness;
    std::optional<std::size_t> witness_prefix;
    std::vector<PrefixVerdict> prefixes;
};

inline constexpr std::uint64_t default_search_budget = std::uint64_t{1} << 40;

/// Searches every prefix (in parallel) for a suffix reaching `target_depth`.
/// Throws ResourceGuardError when |filters| * |levels|^(target - depth)
/// exceeds `search_budget`.
CompletenessReport prove_filter_complete(const FilterSet & filters, int target_depth, unsigned threads = 1,
                                         std::uint64_t search_budget = default_search_budget);

} // namespace snf
