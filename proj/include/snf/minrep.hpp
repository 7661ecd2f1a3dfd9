#pragma once

// Reduction of a dataset of output sets to its minimal representatives up to
// channel permutation, and up to permutation and reflection.

#include <snf/core.hpp>

#include <cstddef>
#include <vector>

namespace snf {

struct Record {
    Network network;
    OutputSet outputs;

    friend bool operator==(const Record &, const Record &) = default;
};

/// Records in generation order; position is the tie-breaking rank.
struct Dataset {
    int n = 0;
    std::vector<Record> records;

    std::size_t size() const noexcept { return records.size(); }
    friend bool operator==(const Dataset &, const Dataset &) = default;
};

struct ReflectionClosure {
    Dataset dataset;
    /// dataset[reflect[i]] holds the reflection of dataset[i]'s output set.
    std::vector<std::size_t> reflect;
};

/// Appends a (reflected network, reflected set) record for every set whose
/// reflection is missing. Lookups use set equality; with duplicate sets the
/// first occurrence is the reflection partner.
ReflectionClosure close_under_reflection(const Dataset & data);

/// subset_of[i] == i iff record i is minimal up to permutation: no record j
/// has pi(F_j) within F_i with either |F_j| < |F_i|, or equal size and j < i.
/// Otherwise subset_of[i] is the least-index minimal record that embeds into
/// F_i, so every chain reaches a fixed point in one step. The result does not
/// depend on `threads`.
std::vector<std::size_t> find_min_rep_perm(const Dataset & data, unsigned threads = 1);
std::vector<std::size_t> find_min_rep_perm(const std::vector<const OutputSet *> & sets, unsigned threads = 1);

/// Intermediate state of min_rep_perm_refl, kept for auditing.
struct ReductionTrace {
    /// Input with exact duplicate sets removed (first occurrence kept).
    Dataset unique;
    ReflectionClosure closure;
    std::vector<std::size_t> subset_of;
    std::vector<bool> min_pi;
    std::vector<bool> min_refl;
};

ReductionTrace reduce_with_trace(const Dataset & data, unsigned threads = 1);

/// Records minimal up to permutation and reflection, in input order.
Dataset min_rep_perm_refl(const Dataset & data, unsigned threads = 1);

/// Re-checks every discard decision in a trace with fresh embedding tests.
/// Returns the number of decisions that failed to re-verify.
std::size_t audit_trace(const ReductionTrace & trace);

} // namespace snf
