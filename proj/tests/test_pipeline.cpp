#include "oracles.hpp"

#include <snf/pipeline.hpp>

#include <doctest.h>

#include <sstream>

using namespace snf;

TEST_CASE("extend order and sizes")
{
    const int n = 5;
    FilterSet empty{n, 0, InputUniverse::full(), {n, {{Network(n), all_inputs(n)}}}};
    const auto levels = nonempty_levels(n);
    const auto one = extend(empty, levels);
    REQUIRE(one.size() == levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k)
        CHECK(one.records[k].network == Network(n, {levels.levels[k]}));

    FilterSet prefixes{n, 1, InputUniverse::full(), {n, {one.records[3], one.records[7]}}};
    const auto two = extend(prefixes, levels, 2);
    REQUIRE(two.size() == 2 * levels.size());
    CHECK(two.records[levels.size()].network == concat(one.records[7].network, levels.levels[0]));
    for (const auto & rec : two.records) {
        CHECK(rec.outputs == output_set(rec.network, all_inputs(n)));
        CHECK(rec.outputs.size() <= prefixes.data.records[0].outputs.size() + prefixes.data.records[1].outputs.size());
    }
    CHECK_THROWS_AS(extend(prefixes, nonempty_levels(6)), UsageError);
}

TEST_CASE("reference counts at small n")
{
    const std::size_t r2[] = {4, 5, 8, 12, 22};
    for (int n = 5; n <= 9; ++n)
        CHECK(compute_r(n, 2).size() == r2[n - 5]);
    CHECK(compute_r(7, 3).size() == 52);
    CHECK(compute_r(5, 3).size() == 4);
    CHECK(compute_r(6, 3).size() == 4);
}

TEST_CASE("omega zero is the full universe")
{
    for (int n = 4; n <= 7; ++n)
        CHECK(compute_r_omega(n, 2, 0).size() == compute_r(n, 2).size());
    const auto r = compute_r_omega(5, 2, 0);
    CHECK(r.universe.label() == "omega:0");
}

TEST_CASE("restricted pipeline stays inside its universe")
{
    const auto stages = compute_stages(6, 2, InputUniverse::restricted_to(2));
    REQUIRE(stages.size() == 2);
    CHECK(stages[0].size() == 1);
    CHECK(stages[0].data.records[0].network == Network(6, {maximal_first_level(6)}));
    for (const auto & rec : stages[1].data.records)
        CHECK(rec.outputs == output_set(rec.network, restricted_inputs(6, 2)));
}

TEST_CASE("stage arguments are validated")
{
    CHECK_THROWS_AS(compute_r(1, 2), UsageError);
    CHECK_THROWS_AS(compute_r(5, 0), UsageError);
    CHECK_THROWS_AS(compute_r(5, 4), UsageError);
    CHECK_THROWS_AS(compute_r_omega(5, 2, 6), UsageError);
    CHECK(default_omega(5) == 2);
    CHECK(default_omega(12) == 5);
    CHECK(default_omega(16) == 7);
    CHECK_FALSE(default_omega(4));
}

TEST_CASE("memory guard refuses before extending")
{
    PipelineOptions tight;
    tight.memory_cap = 1 << 10;
    CHECK_THROWS_AS(compute_r(8, 2, tight), ResourceGuardError);
    CHECK_NOTHROW(compute_r(8, 1, tight));
}

TEST_CASE("speedup rows")
{
    auto row = speedup_table(5, 4, 4, 4);
    CHECK(row.g_n == 26);
    CHECK(format_ratio(*row.ratio) == "26.00");
    CHECK(format_ratio(*row.ratio_omega) == "26.00");
    CHECK(format_ratio(speedup_ratio(12, 764, 38)) == "241.26");
    CHECK(format_ratio(speedup_ratio(50, 140152, 38758)) == "180.80");
    CHECK(format_ratio(speedup_ratio(8, 232, 8 * 232)) == "1.00");
    CHECK_FALSE(speedup_table(9, 22, std::nullopt, std::nullopt).ratio);
    CHECK_THROWS_AS(speedup_ratio(1, 1, 0), UsageError);
}

TEST_CASE("pipeline output does not depend on thread count")
{
    PipelineOptions one, two, eight;
    two.threads = 2;
    eight.threads = 8;
    const auto base = serialize(compute_r(7, 3, one));
    CHECK(serialize(compute_r(7, 3, two)) == base);
    CHECK(serialize(compute_r(7, 3, eight)) == base);
    const auto w = serialize(compute_r_omega(7, 2, 2, one));
    CHECK(serialize(compute_r_omega(7, 2, 2, eight)) == w);
}

// Dataset files.

TEST_CASE("serialization layout")
{
    const int n = 3;
    const Network c(n, {Level(n, {{1, 2}}), Level(n, {{2, 3}})});
    FilterSet f{n, 2, InputUniverse::full(), {n, {{c, output_set(c, all_inputs(n))}}}};
    CHECK(serialize(f) == "SNDS v1 n=3 d=2 universe=full count=1\n"
                          "N 1-2;2-3\n"
                          "S 000,001,101,011,111\n");
    FilterSet empty{n, 0, InputUniverse::restricted_to(1), {n, {{Network(n), restricted_inputs(n, 1)}}}};
    CHECK(serialize(empty) == "SNDS v1 n=3 d=0 universe=omega:1 count=1\n"
                              "N -\n"
                              "S 000,010,001,101,011,111\n");
}

TEST_CASE("round trips")
{
    for (auto universe : {InputUniverse::full(), InputUniverse::restricted_to(2)}) {
        const auto f = compute_stages(5, 2, universe).back();
        const auto text = serialize(f);
        std::istringstream in(text);
        const auto g = load_dataset(in);
        CHECK(g.n == f.n);
        CHECK(g.depth == f.depth);
        CHECK(g.universe == f.universe);
        CHECK(g.data == f.data);
        CHECK(serialize(g) == text);
    }
    const auto r73 = compute_r(7, 3);
    const auto text = serialize(r73);
    std::istringstream in(text);
    CHECK(serialize(load_dataset(in)) == text);

    FilterSet none{4, 2, InputUniverse::full(), {4, {}}};
    std::istringstream in2(serialize(none));
    CHECK(load_dataset(in2).size() == 0);
}

namespace {

/// Line number reported for a malformed file, or 0 when it loads.
std::size_t reject_line(const std::string & text)
{
    std::istringstream in(text);
    try {
        load_dataset(in);
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).starts_with("line " + std::to_string(e.line()) + ": "));
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("malformed files are rejected with line numbers")
{
    const std::string head = "SNDS v1 n=3 d=1 universe=full count=1\n";
    const std::string good_n = "N 1-2\n";
    const std::string good_s = "S 000,010,110,001,011,111\n";
    REQUIRE(reject_line(head + good_n + good_s) == 0);

    CHECK(reject_line("") == 1);
    CHECK(reject_line("SNDS v2 n=3 d=1 universe=full count=1\n" + good_n + good_s) == 1);
    CHECK(reject_line("SNDS v1 n=17 d=1 universe=full count=1\n") == 1);
    CHECK(reject_line("SNDS v1 n=03 d=1 universe=full count=1\n") == 1);
    CHECK(reject_line("SNDS v1 n=3 d=1 universe=omega:4 count=1\n") == 1);
    CHECK(reject_line("SNDS v1 n=3 d=1 universe=half count=1\n") == 1);
    CHECK(reject_line(head + "N 1-4\n" + good_s) == 2);            // channel overflow
    CHECK(reject_line(head + "N 2-1\n" + good_s) == 2);            // reversed comparator
    CHECK(reject_line(head + "N 1-2 2-3\n" + good_s) == 2);        // shared channel
    CHECK(reject_line(head + "N 1-2;2-3\n" + good_s) == 2);        // depth differs from header
    CHECK(reject_line(head + "X 1-2\n" + good_s) == 2);
    CHECK(reject_line(head + good_n + "S 010,000,110,001,011,111\n") == 3); // unsorted set
    CHECK(reject_line(head + good_n + "S 000,000,010,110,001,011,111\n") == 3);
    CHECK(reject_line(head + good_n + "S 000,010,110,001,011\n") == 3);    // wrong outputs
    CHECK(reject_line(head + good_n + "S 0000,010\n") == 3);
    CHECK(reject_line(head + good_n + "S 000,0x0\n") == 3);
    CHECK(reject_line(head + good_n) == 3);                                 // truncated
    CHECK(reject_line(head + good_n + good_s + good_n + good_s) == 4);      // beyond count
    CHECK(reject_line("SNDS v1 n=4 d=1 universe=full count=1\nN 3-4 1-2\nS 0000\n") == 2);
}
