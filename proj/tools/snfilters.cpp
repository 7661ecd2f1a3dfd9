// snfilters: command-line front end for level enumeration, filter-set
// generation, reduction, completeness checks and the summary table.

#include <snf/levels.hpp>
#include <snf/pipeline.hpp>
#include <snf/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_guard = 2;
constexpr int exit_usage = 64;
constexpr int exit_bad_input = 65;

/// Largest n whose level catalog is walked rather than counted by recurrence.
constexpr int enumerate_limit = 14;

/// "8G", "512M", "64K" or plain bytes.
std::uint64_t parse_size(const std::string & text)
{
    if (text.empty())
        throw snf::UsageError("empty size");
    std::uint64_t value = 0;
    const char * end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr == text.data())
        throw snf::UsageError("bad size '" + text + "'");
    int shift = 0;
    if (ptr != end) {
        if (ptr + 1 != end)
            throw snf::UsageError("bad size '" + text + "'");
        switch (*ptr) {
        case 'K': case 'k': shift = 10; break;
        case 'M': case 'm': shift = 20; break;
        case 'G': case 'g': shift = 30; break;
        case 'T': case 't': shift = 40; break;
        default: throw snf::UsageError("bad size suffix in '" + text + "'");
        }
    }
    if (shift && value > (~std::uint64_t{0} >> shift))
        throw snf::UsageError("size '" + text + "' overflows");
    return value << shift;
}

struct RunConfig {
    int n = 0;
    int depth = 2;
    std::string omega; // "", "auto" or a number
    unsigned threads = 1;
    std::string in_path;
    std::string out_path;
    std::string memory_cap;
    bool nonempty = false;
    bool list = false;
    int target_depth = 0;
    std::string expect;
    std::string n_range = "5..13";
    int max_depth = 3;
    int depth3_max_n = 8;
    std::string format = "text";

    snf::PipelineOptions options() const
    {
        snf::PipelineOptions o;
        o.threads = threads;
        if (!memory_cap.empty())
            o.memory_cap = parse_size(memory_cap);
        else if (const char * env = std::getenv("SNF_MEMORY_CAP"); env && *env)
            o.memory_cap = parse_size(env);
        o.log = &std::cerr;
        return o;
    }

    std::optional<int> resolved_omega() const
    {
        if (omega.empty())
            return std::nullopt;
        if (omega == "auto") {
            auto w = snf::default_omega(n);
            if (!w)
                throw snf::UsageError("no tabulated omega for n=" + std::to_string(n) + ", pass a number");
            return w;
        }
        int w = -1;
        auto [ptr, ec] = std::from_chars(omega.data(), omega.data() + omega.size(), w);
        if (ec != std::errc{} || ptr != omega.data() + omega.size() || w < 0 || w > n)
            throw snf::UsageError("--omega must be 'auto' or an integer in [0, n]");
        return w;
    }
};

int run_levels(const RunConfig & cfg)
{
    snf::check_channels(cfg.n);
    if (cfg.list) {
        const auto catalog = cfg.nonempty ? snf::nonempty_levels(cfg.n) : snf::all_levels(cfg.n);
        for (const auto & level : catalog.levels)
            std::cout << (level.empty() ? std::string("-") : snf::to_string(level)) << '\n';
        return exit_ok;
    }
    std::uint64_t count = cfg.n <= enumerate_limit ? snf::enumerate_level_count(cfg.n) : snf::level_count(cfg.n);
    if (cfg.nonempty)
        --count;
    std::cout << count << '\n';
    return exit_ok;
}

int run_pipeline(const RunConfig & cfg)
{
    if (cfg.n < 2 || cfg.n > snf::max_channels)
        throw snf::UsageError("--n must lie in [2, 16]");
    const auto w = cfg.resolved_omega();
    const auto universe = w ? snf::InputUniverse::restricted_to(*w) : snf::InputUniverse::full();
    const auto stages = snf::compute_stages(cfg.n, cfg.depth, universe, cfg.options());
    const auto & result = stages.back();
    if (!cfg.out_path.empty())
        snf::save_dataset(cfg.out_path, result);
    std::cout << "count=" << result.size() << '\n';
    return exit_ok;
}

int run_reduce(const RunConfig & cfg)
{
    auto filters = snf::load_dataset(cfg.in_path);
    filters.data = snf::min_rep_perm_refl(filters.data, cfg.threads);
    if (!cfg.out_path.empty())
        snf::save_dataset(cfg.out_path, filters);
    std::cout << "count=" << filters.size() << '\n';
    return exit_ok;
}

int run_verify(const RunConfig & cfg)
{
    if (!cfg.expect.empty() && cfg.expect != "exists" && cfg.expect != "not-exists")
        throw snf::UsageError("--expect must be 'exists' or 'not-exists'");
    const auto filters = snf::load_dataset(cfg.in_path);
    const auto report = snf::prove_filter_complete(filters, cfg.target_depth, cfg.threads);
    std::cout << "universe=" << filters.universe.label() << " target-depth=" << cfg.target_depth
              << " verdict=" << (report.exists ? "exists" : "not-exists") << '\n';
    if (report.witness)
        std::cout << "witness prefix=" << *report.witness_prefix << " network=" << snf::to_string(*report.witness)
                  << '\n';
    if (!cfg.expect.empty() && (cfg.expect == "exists") != report.exists) {
        std::cerr << "verdict contradicts --expect " << cfg.expect << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

int run_stats(const RunConfig & cfg)
{
    const auto filters = snf::load_dataset(cfg.in_path);
    std::size_t lo = 0, hi = 0, total = 0;
    for (const auto & rec : filters.data.records) {
        const auto s = rec.outputs.size();
        lo = total == 0 && lo == 0 ? s : std::min(lo, s);
        hi = std::max(hi, s);
        total += s;
    }
    std::cout << "n=" << filters.n << '\n'
              << "depth=" << filters.depth << '\n'
              << "universe=" << filters.universe.label() << '\n'
              << "count=" << filters.size() << '\n';
    if (filters.size() != 0)
        std::cout << "outputs-min=" << lo << '\n' << "outputs-max=" << hi << '\n' << "outputs-total=" << total << '\n';
    return exit_ok;
}

std::pair<int, int> parse_range(const std::string & text)
{
    const auto dots = text.find("..");
    int lo = 0, hi = 0;
    bool ok = dots != std::string::npos;
    if (ok) {
        auto r1 = std::from_chars(text.data(), text.data() + dots, lo);
        auto r2 = std::from_chars(text.data() + dots + 2, text.data() + text.size(), hi);
        ok = r1.ec == std::errc{} && r1.ptr == text.data() + dots && r2.ec == std::errc{} &&
             r2.ptr == text.data() + text.size();
    }
    if (!ok || lo < 2 || hi > snf::max_channels || lo > hi)
        throw snf::UsageError("--n-range must look like 5..13 within [2, 16]");
    return {lo, hi};
}

int run_table(const RunConfig & cfg)
{
    if (cfg.format != "text" && cfg.format != "tsv")
        throw snf::UsageError("--format must be 'text' or 'tsv'");
    if (cfg.max_depth < 1 || cfg.max_depth > 3)
        throw snf::UsageError("--max-depth must be 1, 2 or 3");
    const auto [lo, hi] = parse_range(cfg.n_range);
    auto options = cfg.options();

    const std::vector<std::string> header = {"n",        "omega",    "|G_n|",    "|R_n,1|", "|R_n,2|",
                                             "|R_n,2|w|", "|R_n,3|", "|R_n,3^w|", "speedup", "speedup_w"};
    std::vector<std::vector<std::string>> rows;
    const auto cell = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("-"); };

    for (int n = lo; n <= hi; ++n) {
        const auto w = snf::default_omega(n);
        std::optional<std::size_t> r1, r2, r2w, r3, r3w;
        const auto attempt = [&](auto && body) {
            try {
                body();
            }
            catch (const snf::ResourceGuardError & e) {
                std::cerr << "n=" << n << ": " << e.what() << '\n';
            }
        };
        const int full_depth = cfg.max_depth >= 3 && n <= cfg.depth3_max_n ? 3 : std::min(cfg.max_depth, 2);
        attempt([&] {
            const auto stages = snf::compute_stages(n, full_depth, snf::InputUniverse::full(), options);
            r1 = stages[0].size();
            if (stages.size() > 1)
                r2 = stages[1].size();
            if (stages.size() > 2)
                r3 = stages[2].size();
        });
        if (w && cfg.max_depth >= 2)
            attempt([&] {
                const auto stages = snf::compute_stages(n, full_depth, snf::InputUniverse::restricted_to(*w), options);
                r2w = stages[1].size();
                if (stages.size() > 2)
                    r3w = stages[2].size();
            });

        std::vector<std::string> row = {std::to_string(n), w ? std::to_string(*w) : "-",
                                        std::to_string(snf::level_count(n)), cell(r1), cell(r2), cell(r2w), cell(r3),
                                        cell(r3w)};
        const auto g_n = snf::level_count(n);
        row.push_back(r2 && r3 ? snf::format_ratio(snf::speedup_ratio(*r2, g_n, *r3)) : "-");
        row.push_back(r2 && r3w ? snf::format_ratio(snf::speedup_ratio(*r2, g_n, *r3w)) : "-");
        rows.push_back(std::move(row));
    }

    if (cfg.format == "tsv") {
        for (std::size_t c = 0; c < header.size(); ++c)
            std::cout << (c ? "\t" : "") << header[c];
        std::cout << '\n';
        for (const auto & row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? "\t" : "") << row[c];
            std::cout << '\n';
        }
        return exit_ok;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto & row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    const auto print = [&](const std::vector<std::string> & row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        std::cout << '\n';
    };
    print(header);
    for (const auto & row : rows)
        print(row);
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Complete filter sets of comparator networks, minimal up to permutation and reflection"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 verdict mismatch, 2 resource guard refusal, 64 usage error, 65 bad input file.\n"
               "SNF_MEMORY_CAP sets the memory cap (e.g. 8G) when --memory-cap is not given; default 8G.");

    RunConfig cfg;
    const auto add_threads = [&](CLI::App * sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    };
    const auto add_cap = [&](CLI::App * sub) {
        sub->add_option("--memory-cap", cfg.memory_cap, "Memory cap such as 512M or 8G (overrides SNF_MEMORY_CAP)");
    };

    auto * levels = app.add_subcommand("levels", "Count (or list) the levels on n channels");
    levels->add_option("--n", cfg.n, "Channels")->required();
    levels->add_flag("--nonempty", cfg.nonempty, "Leave out the empty level");
    levels->add_flag("--list", cfg.list, "Print every level in catalog order");

    auto * pipeline = app.add_subcommand("pipeline", "Compute the filter set of a given depth");
    pipeline->add_option("--n", cfg.n, "Channels")->required();
    pipeline->add_option("--depth", cfg.depth, "Depth 1, 2 or 3")->required();
    pipeline->add_option("--omega", cfg.omega, "Restrict inputs to B|w; 'auto' takes w from the table");
    pipeline->add_option("--out", cfg.out_path, "Dataset file to write");
    add_threads(pipeline);
    add_cap(pipeline);

    auto * reduce = app.add_subcommand("reduce", "Reduce a dataset to its minimal representatives");
    reduce->add_option("--in", cfg.in_path, "Dataset file")->required();
    reduce->add_option("--out", cfg.out_path, "Dataset file to write");
    add_threads(reduce);

    auto * verify = app.add_subcommand("verify", "Search for sorting suffixes of every prefix in a dataset");
    verify->add_option("--in", cfg.in_path, "Dataset file")->required();
    verify->add_option("--target-depth", cfg.target_depth, "Total depth of the networks sought")->required();
    verify->add_option("--expect", cfg.expect, "exists or not-exists; exit 1 when the verdict differs");
    add_threads(verify);

    auto * stats = app.add_subcommand("stats", "Summarize a dataset file");
    stats->add_option("--in", cfg.in_path, "Dataset file")->required();

    auto * table = app.add_subcommand("table", "Counts and speedup ratios for a range of n");
    table->add_option("--n-range", cfg.n_range, "Range such as 5..13")->capture_default_str();
    table->add_option("--max-depth", cfg.max_depth, "Deepest filter sets to compute")->capture_default_str();
    table->add_option("--depth3-max-n", cfg.depth3_max_n, "Largest n for depth-3 cells")->capture_default_str();
    table->add_option("--format", cfg.format, "text or tsv")->capture_default_str();
    add_threads(table);
    add_cap(table);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        std::cerr << app.help();
        return exit_usage;
    }

    try {
        if (*levels)
            return run_levels(cfg);
        if (*pipeline)
            return run_pipeline(cfg);
        if (*reduce)
            return run_reduce(cfg);
        if (*verify)
            return run_verify(cfg);
        if (*stats)
            return run_stats(cfg);
        return run_table(cfg);
    }
    catch (const snf::ResourceGuardError & e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_guard;
    }
    catch (const snf::UsageError & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const snf::ParseError & e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return exit_bad_input;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
}
