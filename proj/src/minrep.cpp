#include <snf/minrep.hpp>

#include <snf/parallel.hpp>
#include <snf/subsume.hpp>

#include <algorithm>
#include <memory>
#include <numeric>

namespace snf {

namespace {

bool words_less(const OutputSet * a, const OutputSet * b)
{
    return std::lexicographical_compare(a->begin(), a->end(), b->begin(), b->end());
}

/// Indices sorted by set contents, ties by index.
std::vector<std::size_t> sorted_by_contents(const std::vector<const OutputSet *> & sets)
{
    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return words_less(sets[x], sets[y]); });
    return order;
}

/// First index whose set equals `key`, or npos.
std::size_t lookup(const std::vector<const OutputSet *> & sets, const std::vector<std::size_t> & order,
                   const OutputSet & key)
{
    auto it = std::lower_bound(order.begin(), order.end(), &key,
                               [&](std::size_t idx, const OutputSet * k) { return words_less(sets[idx], k); });
    if (it != order.end() && sets[*it]->words() == key.words())
        return *it;
    return static_cast<std::size_t>(-1);
}

} // namespace

ReflectionClosure close_under_reflection(const Dataset & data)
{
    const std::size_t r = data.size();
    std::vector<const OutputSet *> sets(r);
    for (std::size_t i = 0; i < r; ++i)
        sets[i] = &data.records[i].outputs;
    const auto order = sorted_by_contents(sets);

    ReflectionClosure out;
    out.dataset = data;
    out.reflect.assign(r, 0);

    std::vector<OutputSet> mirrored(r);
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < r; ++i) {
        mirrored[i] = reflect_set(data.records[i].outputs);
        const auto j = lookup(sets, order, mirrored[i]);
        if (j == static_cast<std::size_t>(-1))
            missing.push_back(i);
        else
            out.reflect[i] = j;
    }

    // Duplicate originals would produce duplicate appended records; keep the
    // first of each.
    std::vector<const OutputSet *> appended_sets;
    for (auto i : missing)
        appended_sets.push_back(&mirrored[i]);
    const auto appended_order = sorted_by_contents(appended_sets);
    std::vector<std::size_t> position(missing.size(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < missing.size(); ++k) {
        const auto first = lookup(appended_sets, appended_order, mirrored[missing[k]]);
        if (first != k) {
            position[k] = position[first];
            continue;
        }
        const auto i = missing[k];
        position[k] = out.dataset.records.size();
        out.dataset.records.push_back({reflect_network(data.records[i].network), mirrored[i]});
        out.reflect.push_back(i);
    }
    for (std::size_t k = 0; k < missing.size(); ++k)
        out.reflect[missing[k]] = position[k];
    return out;
}

std::vector<std::size_t> find_min_rep_perm(const std::vector<const OutputSet *> & sets, unsigned threads)
{
    const std::size_t r = sets.size();
    std::vector<std::size_t> subset_of(r);
    std::iota(subset_of.begin(), subset_of.end(), 0);
    if (r == 0)
        return subset_of;

    // Process by (size, index): every possible subsumer of a record comes
    // before it in this order, and subsumption is transitive, so only records
    // already found minimal need to be tried.
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sets[x]->size() < sets[y]->size(); });

    std::vector<std::unique_ptr<PreparedSet>> prepared(r);
    std::vector<std::size_t> minimal; // ascending index

    std::size_t begin = 0;
    while (begin < r) {
        std::size_t end = begin;
        const auto bucket_size = sets[order[begin]]->size();
        while (end < r && sets[order[end]]->size() == bucket_size)
            ++end;
        const std::size_t count = end - begin;

        // Strictly smaller minimal sets.
        std::vector<char> survivor(count, 0);
        parallel_for(count, threads, [&](std::size_t t) {
            const auto idx = order[begin + t];
            auto self = std::make_unique<PreparedSet>(*sets[idx]);
            for (auto m : minimal) {
                const auto & pm = *prepared[m];
                if (!weight_dominated(pm.sig(), self->sig()))
                    continue;
                if (find_embedding(pm, *self)) {
                    subset_of[idx] = m;
                    return;
                }
            }
            survivor[t] = 1;
            prepared[idx] = std::move(self);
        });

        // Same-size embeddings are equivalences: the least index of each class wins.
        std::vector<std::size_t> alive;
        for (std::size_t t = 0; t < count; ++t)
            if (survivor[t])
                alive.push_back(order[begin + t]);
        std::sort(alive.begin(), alive.end(), [&](std::size_t x, std::size_t y) {
            const auto hx = prepared[x]->invariant_hash();
            const auto hy = prepared[y]->invariant_hash();
            return hx != hy ? hx < hy : x < y;
        });
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (std::size_t g = 0; g < alive.size();) {
            std::size_t h = g;
            while (h < alive.size() && prepared[alive[h]]->invariant_hash() == prepared[alive[g]]->invariant_hash())
                ++h;
            groups.emplace_back(g, h);
            g = h;
        }
        parallel_for(
            groups.size(), threads,
            [&](std::size_t gi) {
                std::vector<std::size_t> reps;
                for (std::size_t t = groups[gi].first; t < groups[gi].second; ++t) {
                    const auto idx = alive[t];
                    for (auto rep : reps) {
                        if (find_embedding(*prepared[rep], *prepared[idx])) {
                            subset_of[idx] = rep;
                            break;
                        }
                    }
                    if (subset_of[idx] == idx)
                        reps.push_back(idx);
                }
            },
            4);

        std::vector<std::size_t> fresh;
        for (auto idx : alive) {
            if (subset_of[idx] == idx)
                fresh.push_back(idx);
            else
                prepared[idx].reset();
        }
        std::sort(fresh.begin(), fresh.end());
        std::vector<std::size_t> merged;
        merged.reserve(minimal.size() + fresh.size());
        std::merge(minimal.begin(), minimal.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
        minimal = std::move(merged);
        begin = end;
    }
    return subset_of;
}

std::vector<std::size_t> find_min_rep_perm(const Dataset & data, unsigned threads)
{
    std::vector<const OutputSet *> sets(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        sets[i] = &data.records[i].outputs;
    return find_min_rep_perm(sets, threads);
}

ReductionTrace reduce_with_trace(const Dataset & data, unsigned threads)
{
    ReductionTrace trace;
    trace.unique.n = data.n;
    {
        std::vector<const OutputSet *> sets(data.size());
        for (std::size_t i = 0; i < data.size(); ++i)
            sets[i] = &data.records[i].outputs;
        const auto order = sorted_by_contents(sets);
        std::vector<char> keep(data.size(), 0);
        for (std::size_t k = 0; k < order.size(); ++k)
            if (k == 0 || sets[order[k - 1]]->words() != sets[order[k]]->words())
                keep[order[k]] = 1;
        for (std::size_t i = 0; i < data.size(); ++i)
            if (keep[i])
                trace.unique.records.push_back(data.records[i]);
    }

    trace.closure = close_under_reflection(trace.unique);
    trace.subset_of = find_min_rep_perm(trace.closure.dataset, threads);

    const auto & subset_of = trace.subset_of;
    const std::size_t total = subset_of.size();
    trace.min_pi.assign(total, false);
    trace.min_refl.assign(total, false);
    for (std::size_t i = 0; i < total; ++i) {
        if (subset_of[i] != i)
            continue;
        trace.min_pi[i] = true;
        // Follow the reflection's chain to a permutation-minimal record.
        auto item = trace.closure.reflect[i];
        while (subset_of[item] != item)
            item = subset_of[item];
        trace.min_refl[i] = item >= i;
    }
    return trace;
}

Dataset min_rep_perm_refl(const Dataset & data, unsigned threads)
{
    const auto trace = reduce_with_trace(data, threads);
    Dataset out;
    out.n = data.n;
    const auto & records = trace.closure.dataset.records;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (trace.min_pi[i] && trace.min_refl[i])
            out.records.push_back(records[i]);
    return out;
}

std::size_t audit_trace(const ReductionTrace & trace)
{
    const auto & records = trace.closure.dataset.records;
    const auto & subset_of = trace.subset_of;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto & fi = records[i].outputs;
        if (trace.closure.reflect[trace.closure.reflect[i]] != i ||
            reflect_set(fi) != records[trace.closure.reflect[i]].outputs) {
            ++failures;
            continue;
        }
        if (subset_of[i] != i) {
            const auto j = subset_of[i];
            const auto & fj = records[j].outputs;
            const bool ranked = fj.size() < fi.size() || (fj.size() == fi.size() && j < i);
            if (!ranked || !find_embedding(fj, fi))
                ++failures;
            continue;
        }
        auto item = trace.closure.reflect[i];
        while (subset_of[item] != item)
            item = subset_of[item];
        // The chain end must embed into the reflection of F_i.
        if (!find_embedding(records[item].outputs, records[trace.closure.reflect[i]].outputs))
            ++failures;
        if (trace.min_refl[i] != (item >= i))
            ++failures;
    }
    return failures;
}

} // namespace snf
