#pragma once

// Decides whether some channel permutation pi maps one output set into
// another: pi(A) is a subset of B.

#include <snf/core.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace snf {

/// Permutation-invariant counts used to prune the embedding search.
struct SetSignature {
    int n = 0;
    /// weight_hist[k]: vectors with popcount k.
    std::vector<std::uint32_t> weight_hist;
    /// profile[i * (n + 1) + k]: weight-k vectors with channel i + 1 set.
    std::vector<std::uint32_t> channel_profile;

    std::uint32_t profile(int channel0, int k) const noexcept { return channel_profile[channel0 * (n + 1) + k]; }

    friend bool operator==(const SetSignature &, const SetSignature &) = default;
};

SetSignature signature(const OutputSet & set);

/// Hash of the signature with profile rows sorted, so it is unchanged by
/// any channel permutation of the set.
std::uint64_t permutation_invariant_hash(const SetSignature & sig);

/// An output set together with the data the embedding search consults.
class PreparedSet {
public:
    PreparedSet() = default;
    explicit PreparedSet(const OutputSet & set);

    const OutputSet & set() const noexcept { return *set_; }
    const SetSignature & sig() const noexcept { return sig_; }
    std::uint64_t invariant_hash() const noexcept { return hash_; }

    bool contains(std::uint32_t w) const noexcept { return (bitmap_[w >> 6] >> (w & 63)) & 1U; }

private:
    const OutputSet * set_ = nullptr;
    SetSignature sig_;
    std::vector<std::uint64_t> bitmap_;
    std::uint64_t hash_ = 0;
};

/// Cheap necessary condition: |A| <= |B| and per-weight counts dominate.
bool weight_dominated(const SetSignature & a, const SetSignature & b) noexcept;

/// Some pi with pi(A) within B, or nullopt. Any returned pi has been checked
/// against B directly.
std::optional<Permutation> find_embedding(const PreparedSet & a, const PreparedSet & b);
std::optional<Permutation> find_embedding(const OutputSet & a, const OutputSet & b);

/// Exhaustive reference: tries all n! permutations in lexicographic order. n <= 8.
std::optional<Permutation> brute_force_embedding(const OutputSet & a, const OutputSet & b);

} // namespace snf
