#include "oracles.hpp"

#include <snf/levels.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace snf;

TEST_CASE("catalog sizes follow the matching count")
{
    const std::uint64_t small[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
    for (int n = 1; n <= 8; ++n) {
        CHECK(all_levels(n).size() == small[n]);
        CHECK(level_count(n) == small[n]);
        CHECK(nonempty_levels(n).size() == small[n] - 1);
    }
    for (int n = 1; n <= 16; ++n)
        CHECK(level_count(n) == oracle::telephone(n));
    for (int n = 1; n <= 11; ++n)
        CHECK(enumerate_level_count(n) == level_count(n));
    CHECK_THROWS_AS(all_levels(0), UsageError);
    CHECK_THROWS_AS(level_count(17), UsageError);
}

TEST_CASE("catalog equals brute-force matchings")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<std::pair<int, int>>> expect;
        for (auto m : oracle::matchings(n)) {
            std::sort(m.begin(), m.end());
            expect.insert(m);
        }
        std::set<std::vector<std::pair<int, int>>> got;
        for (const auto & l : all_levels(n).levels) {
            std::vector<std::pair<int, int>> m;
            for (auto c : l.comparators())
                m.emplace_back(c.lo, c.hi);
            got.insert(m);
        }
        CHECK(got == expect);
        CHECK(got.size() == all_levels(n).size());
    }
}

TEST_CASE("catalog order is lexicographic and starts with the empty level")
{
    const auto cat = all_levels(6);
    CHECK(cat.levels.front().empty());
    CHECK(std::is_sorted(cat.levels.begin(), cat.levels.end()));
    CHECK(std::adjacent_find(cat.levels.begin(), cat.levels.end()) == cat.levels.end());
    CHECK(to_string(cat.levels[1]) == "1-2");
    CHECK(to_string(cat.levels[2]) == "1-2 3-4");
    CHECK(std::none_of(nonempty_levels(6).levels.begin(), nonempty_levels(6).levels.end(),
                       [](const Level & l) { return l.empty(); }));
}

TEST_CASE("maximal level and class representatives")
{
    CHECK(to_string(maximal_first_level(5)) == "1-2 3-4");
    CHECK(to_string(maximal_first_level(6)) == "1-2 3-4 5-6");
    CHECK_THROWS_AS(maximal_first_level(1), UsageError);
    const auto reps = level_class_representatives(7);
    REQUIRE(reps.size() == 3);
    CHECK(reps.levels.back() == maximal_first_level(7));

    // Every nonempty level's output set is a channel permutation of its
    // representative's, which is the first level of that size in the catalog.
    for (int n = 2; n <= 6; ++n) {
        const auto cat = nonempty_levels(n);
        const auto reps_n = level_class_representatives(n);
        for (const auto & rep : reps_n.levels) {
            const auto first = std::find_if(cat.levels.begin(), cat.levels.end(),
                                            [&](const Level & l) { return l.size() == rep.size(); });
            CHECK(*first == rep);
        }
        for (const auto & l : cat.levels) {
            const auto & rep = reps_n.levels[l.size() - 1];
            const auto sl = oracle::outputs(oracle::to_net(Network(n, {l})), n, oracle::every_input(n));
            const auto sr = oracle::outputs(oracle::to_net(Network(n, {rep})), n, oracle::every_input(n));
            CHECK(oracle::embeds(sl, sr, n));
            CHECK(oracle::embeds(sr, sl, n));
        }
    }
}
