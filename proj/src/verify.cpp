#include <snf/verify.hpp>

#include <snf/parallel.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace snf {

const std::optional<SearchMemo::Suffix> * SearchMemo::find(const OutputSet & set, int depth) const
{
    auto it = entries_.find({set.words(), depth});
    return it == entries_.end() ? nullptr : &it->second;
}

void SearchMemo::store(const OutputSet & set, int depth, std::optional<Suffix> result)
{
    entries_.emplace(std::make_pair(set.words(), depth), std::move(result));
}

namespace {

bool all_sorted(const OutputSet & set)
{
    const int n = set.channels();
    return std::all_of(set.begin(), set.end(), [n](Word w) { return is_sorted_word(w, n); });
}

/// follows[i] has bit j set when some vector has channel i+1 at 1 and channel j+1 at 0.
std::array<std::uint32_t, max_channels> disorder_masks(const OutputSet & set)
{
    std::array<std::uint32_t, max_channels> follows{};
    const int n = set.channels();
    for (Word w : set) {
        const std::uint32_t zeros = ~std::uint32_t{w} & full_mask(n);
        for (std::uint32_t bits = w; bits != 0; bits &= bits - 1)
            follows[std::countr_zero(bits)] |= zeros;
    }
    return follows;
}

SearchMemo::Suffix padding(int n, int k)
{
    // Sorted vectors stay sorted under any min-max level.
    const Level filler = n >= 2 ? Level(n, {Comparator{1, 2}}) : Level(n);
    return SearchMemo::Suffix(static_cast<std::size_t>(k), filler);
}

std::optional<SearchMemo::Suffix> search(const OutputSet & set, int k, const LevelCatalog & levels, SearchMemo * memo)
{
    if (all_sorted(set))
        return padding(set.channels(), k);
    if (k == 0)
        return std::nullopt;
    if (memo)
        if (auto hit = memo->find(set, k))
            return *hit;

    // A comparator that never swaps on this set acts like no comparator; the
    // level without it is also in the catalog, and an identity step is covered
    // by the sortedness check above. Skip levels with such comparators.
    const auto follows = disorder_masks(set);
    std::optional<SearchMemo::Suffix> result;
    for (const auto & level : levels.levels) {
        if (level.empty())
            continue;
        const auto comps = level.comparators();
        const bool useful = std::all_of(comps.begin(), comps.end(), [&](const Comparator & c) {
            return (follows[c.lo - 1] >> (c.hi - 1)) & 1U;
        });
        if (!useful)
            continue;
        if (auto rest = search(apply_level(set, level), k - 1, levels, memo)) {
            rest->insert(rest->begin(), level);
            result = std::move(rest);
            break;
        }
    }
    if (memo)
        memo->store(set, k, result);
    return result;
}

} // namespace

std::optional<Network> dfs_extend(const OutputSet & set, int k, const LevelCatalog & levels, SearchMemo * memo)
{
    if (k < 0)
        throw UsageError("suffix depth must be non-negative");
    if (levels.n != set.channels())
        throw UsageError("level catalog and set have different channel counts");
    auto suffix = search(set, k, levels, memo);
    if (!suffix)
        return std::nullopt;
    return Network(set.channels(), std::move(*suffix));
}

CompletenessReport prove_filter_complete(const FilterSet & filters, int target_depth, unsigned threads,
                                         std::uint64_t search_budget)
{
    if (target_depth < filters.depth)
        throw UsageError("target depth is below the filter depth");
    const int k = target_depth - filters.depth;
    const auto levels = nonempty_levels(filters.n);

    double estimate = static_cast<double>(filters.size());
    for (int i = 0; i < k; ++i)
        estimate *= static_cast<double>(levels.size());
    if (estimate > static_cast<double>(search_budget))
        throw ResourceGuardError("suffix search space of about " + std::to_string(estimate) +
                                 " level sequences exceeds the budget");

    CompletenessReport report;
    report.target_depth = target_depth;
    report.prefixes.resize(filters.size());
    std::vector<std::optional<Network>> suffixes(filters.size());
    parallel_for(
        filters.size(), threads,
        [&](std::size_t i) {
            SearchMemo memo;
            suffixes[i] = dfs_extend(filters.data.records[i].outputs, k, levels, &memo);
            report.prefixes[i] = {i, suffixes[i].has_value()};
        },
        1);

    for (std::size_t i = 0; i < filters.size(); ++i) {
        if (!suffixes[i])
            continue;
        auto witness = concat(filters.data.records[i].network, *suffixes[i]);
        const auto outputs = output_set(witness, filters.universe.inputs(filters.n));
        const bool sorts = filters.universe.restricted ? all_sorted(outputs) : is_sorting_network(witness);
        if (!sorts)
            throw std::logic_error("suffix search produced a witness that does not sort");
        report.exists = true;
        report.witness = std::move(witness);
        report.witness_prefix = i;
        break;
    }
    return report;
}

} // namespace snf
