#include <snf/pipeline.hpp>

#include <snf/parallel.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace snf {

OutputSet InputUniverse::inputs(int n) const { return restricted ? restricted_inputs(n, omega) : all_inputs(n); }

std::string InputUniverse::label() const { return restricted ? "omega:" + std::to_string(omega) : "full"; }

std::optional<int> default_omega(int n)
{
    static constexpr int table[] = {2, 2, 2, 3, 3, 4, 4, 5, 3, 4, 7, 7};
    if (n < 5 || n > 16)
        return std::nullopt;
    return table[n - 5];
}

Dataset extend(const FilterSet & prefixes, const LevelCatalog & levels, unsigned threads)
{
    if (prefixes.n != levels.n)
        throw UsageError("prefixes and level catalog have different channel counts");
    std::vector<const Level *> usable;
    for (const auto & l : levels.levels)
        if (!l.empty())
            usable.push_back(&l);

    Dataset out;
    out.n = prefixes.n;
    out.records.resize(prefixes.size() * usable.size());
    parallel_for(
        prefixes.size(), threads,
        [&](std::size_t p) {
            const auto & prefix = prefixes.data.records[p];
            for (std::size_t k = 0; k < usable.size(); ++k) {
                auto & rec = out.records[p * usable.size() + k];
                rec.network = concat(prefix.network, *usable[k]);
                rec.outputs = apply_level(prefix.outputs, *usable[k]);
            }
        },
        1);
    return out;
}

std::uint64_t estimate_extension_bytes(const FilterSet & prefixes, std::size_t level_count)
{
    std::uint64_t per_level = 0;
    for (const auto & rec : prefixes.data.records)
        per_level += rec.outputs.size() * sizeof(Word) + sizeof(Record) +
                     (rec.network.depth() + 1) * sizeof(Level);
    // Reduction keeps roughly one more copy of the data (closure, prepared sets).
    return 2 * per_level * static_cast<std::uint64_t>(level_count);
}

namespace {

void log_line(const PipelineOptions & options, const std::string & line)
{
    if (options.log)
        *options.log << line << std::endl;
}

} // namespace

std::vector<FilterSet> compute_stages(int n, int depth, InputUniverse universe, const PipelineOptions & options)
{
    if (n < 2 || n > max_channels)
        throw UsageError("n must lie in [2, 16]");
    if (depth < 1 || depth > 3)
        throw UsageError("depth must be 1, 2 or 3");
    if (universe.restricted && (universe.omega < 0 || universe.omega > n))
        throw UsageError("omega must lie in [0, n]");

    const auto inputs = universe.inputs(n);
    std::vector<FilterSet> stages;

    FilterSet first{n, 1, universe, {n, {}}};
    if (universe.restricted) {
        const Network seed(n, {maximal_first_level(n)});
        first.data.records.push_back({seed, output_set(seed, inputs)});
    }
    else {
        // One-level networks with equally many comparators are permutations
        // of each other, so one per class is enough.
        FilterSet empty{n, 0, universe, {n, {{Network(n), inputs}}}};
        const auto candidates = extend(empty, level_class_representatives(n), options.threads);
        log_line(options, "n=" + std::to_string(n) + " depth=1 candidates=" + std::to_string(candidates.size()));
        first.data = min_rep_perm_refl(candidates, options.threads);
    }
    log_line(options, "n=" + std::to_string(n) + " depth=1 universe=" + universe.label() +
                          " kept=" + std::to_string(first.size()));
    stages.push_back(std::move(first));

    if (depth == 1)
        return stages;
    const auto levels = nonempty_levels(n);
    for (int d = 2; d <= depth; ++d) {
        const auto & prev = stages.back();
        const auto need = estimate_extension_bytes(prev, levels.size());
        if (need > options.memory_cap)
            throw ResourceGuardError("depth " + std::to_string(d) + " for n=" + std::to_string(n) + " needs about " +
                                     std::to_string(need >> 20) + " MiB, above the cap of " +
                                     std::to_string(options.memory_cap >> 20) + " MiB");
        const auto candidates = extend(prev, levels, options.threads);
        log_line(options, "n=" + std::to_string(n) + " depth=" + std::to_string(d) +
                              " candidates=" + std::to_string(candidates.size()));
        FilterSet next{n, d, universe, min_rep_perm_refl(candidates, options.threads)};
        log_line(options, "n=" + std::to_string(n) + " depth=" + std::to_string(d) + " universe=" + universe.label() +
                              " kept=" + std::to_string(next.size()));
        stages.push_back(std::move(next));
    }
    return stages;
}

FilterSet compute_r(int n, int depth, const PipelineOptions & options)
{
    return std::move(compute_stages(n, depth, InputUniverse::full(), options).back());
}

FilterSet compute_r_omega(int n, int depth, int omega, const PipelineOptions & options)
{
    return std::move(compute_stages(n, depth, InputUniverse::restricted_to(omega), options).back());
}

double speedup_ratio(std::size_t r2, std::uint64_t g_n, std::size_t r3)
{
    if (r3 == 0)
        throw UsageError("speedup needs a nonempty depth-3 filter set");
    return static_cast<double>(r2) * static_cast<double>(g_n) / static_cast<double>(r3);
}

std::string format_ratio(double ratio)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ratio);
    return buf;
}

SpeedupRow speedup_table(int n, std::size_t r2, std::optional<std::size_t> r3, std::optional<std::size_t> r3_omega)
{
    SpeedupRow row;
    row.n = n;
    row.g_n = level_count(n);
    row.r2 = r2;
    row.r3 = r3;
    row.r3_omega = r3_omega;
    if (r3)
        row.ratio = speedup_ratio(r2, row.g_n, *r3);
    if (r3_omega)
        row.ratio_omega = speedup_ratio(r2, row.g_n, *r3_omega);
    return row;
}

} // namespace snf
