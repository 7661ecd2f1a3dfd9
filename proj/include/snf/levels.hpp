#pragma once

#include <snf/core.hpp>

#include <cstdint>
#include <vector>

namespace snf {

/// Every level on n channels in ascending lexicographic order.
struct LevelCatalog {
    int n = 0;
    std::vector<Level> levels;

    std::size_t size() const noexcept { return levels.size(); }
};

/// All matchings of K_n, the empty matching included.
LevelCatalog all_levels(int n);
LevelCatalog nonempty_levels(int n);

/// Number of matchings of K_n (telephone numbers), without enumerating them.
std::uint64_t level_count(int n);

/// Walks every matching without storing it; agrees with level_count.
std::uint64_t enumerate_level_count(int n);

/// One nonempty level per comparator count k: {<1,2>, ..., <2k-1,2k>}. Two
/// levels with the same count have output sets that are channel permutations
/// of each other, and each of these is the first of its class in the catalog.
LevelCatalog level_class_representatives(int n);

/// {<1,2>, <3,4>, ...} with floor(n/2) comparators.
Level maximal_first_level(int n);

} // namespace snf
