#include <snf/levels.hpp>

#include <algorithm>
#include <bit>

namespace snf {

namespace {

void pair_from(int n, std::uint32_t free, std::vector<Comparator> & current, std::vector<Level> & out)
{
    if (free == 0) {
        out.emplace_back(n, current);
        return;
    }
    const int c = std::countr_zero(free);
    const std::uint32_t rest = free & (free - 1);
    // Channel c + 1 stays idle.
    pair_from(n, rest, current, out);
    for (std::uint32_t others = rest; others != 0; others &= others - 1) {
        const int j = std::countr_zero(others);
        current.push_back({static_cast<std::uint8_t>(c + 1), static_cast<std::uint8_t>(j + 1)});
        pair_from(n, rest & ~(std::uint32_t{1} << j), current, out);
        current.pop_back();
    }
}

std::uint64_t count_from(std::uint32_t free)
{
    if (free == 0)
        return 1;
    const std::uint32_t rest = free & (free - 1);
    std::uint64_t total = count_from(rest);
    for (std::uint32_t others = rest; others != 0; others &= others - 1)
        total += count_from(rest & ~(others & -others));
    return total;
}

} // namespace

LevelCatalog all_levels(int n)
{
    check_channels(n);
    LevelCatalog catalog{n, {}};
    catalog.levels.reserve(level_count(n));
    std::vector<Comparator> current;
    pair_from(n, full_mask(n), current, catalog.levels);
    std::sort(catalog.levels.begin(), catalog.levels.end());
    return catalog;
}

LevelCatalog nonempty_levels(int n)
{
    auto catalog = all_levels(n);
    // The empty level sorts first.
    catalog.levels.erase(catalog.levels.begin());
    return catalog;
}

std::uint64_t level_count(int n)
{
    check_channels(n);
    // T(k) = T(k-1) + (k-1) T(k-2)
    std::uint64_t prev = 1, cur = 1;
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::uint64_t enumerate_level_count(int n)
{
    check_channels(n);
    return count_from(full_mask(n));
}

LevelCatalog level_class_representatives(int n)
{
    check_channels(n);
    LevelCatalog catalog{n, {}};
    std::vector<Comparator> comps;
    for (int i = 1; i + 1 <= n; i += 2) {
        comps.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i + 1)});
        catalog.levels.emplace_back(n, comps);
    }
    return catalog;
}

Level maximal_first_level(int n)
{
    if (n < 2 || n > max_channels)
        throw UsageError("maximal first level needs 2 <= n <= 16");
    std::vector<Comparator> comps;
    for (int i = 1; i + 1 <= n; i += 2)
        comps.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i + 1)});
    return Level(n, comps);
}

} // namespace snf
