#pragma once

// Builds complete filter sets level by level: extend every prefix by every
// nonempty level, then keep the minimal representatives up to permutation
// and reflection.

#include <snf/levels.hpp>
#include <snf/minrep.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snf {

/// Raised when a computation is estimated to exceed the configured memory cap.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs the output sets range over: all of I_n, or the restricted set B|w.
struct InputUniverse {
    bool restricted = false;
    int omega = 0;

    static InputUniverse full() { return {}; }
    static InputUniverse restricted_to(int w) { return {true, w}; }

    OutputSet inputs(int n) const;
    std::string label() const;

    friend bool operator==(const InputUniverse &, const InputUniverse &) = default;
};

struct FilterSet {
    int n = 0;
    int depth = 0;
    InputUniverse universe;
    Dataset data;

    std::size_t size() const noexcept { return data.size(); }
};

/// Restriction width for each n (n = 5..16).
std::optional<int> default_omega(int n);

inline constexpr std::uint64_t default_memory_cap = std::uint64_t{8} << 30;

struct PipelineOptions {
    unsigned threads = 1;
    std::uint64_t memory_cap = default_memory_cap;
    /// Per-stage progress lines; null for silence.
    std::ostream * log = nullptr;
};

/// Every (prefix + level) for nonempty levels, prefix-major. Output sets are
/// derived from the prefix's set, never from the input universe.
Dataset extend(const FilterSet & prefixes, const LevelCatalog & levels, unsigned threads = 1);

/// Bytes extend() would need, computed from the prefix set sizes.
std::uint64_t estimate_extension_bytes(const FilterSet & prefixes, std::size_t level_count);

/// Filter sets for depths 1..depth. Full universe: depth 1 reduces one
/// one-level network per comparator count. Restricted universe: depth 1 is the maximal first
/// level over B|w.
std::vector<FilterSet> compute_stages(int n, int depth, InputUniverse universe, const PipelineOptions & options = {});

FilterSet compute_r(int n, int depth, const PipelineOptions & options = {});
FilterSet compute_r_omega(int n, int depth, int omega, const PipelineOptions & options = {});

/// |R_{n,2}| * |G_n| / |R_{n,3}|, the expected reduction in third-level work.
double speedup_ratio(std::size_t r2, std::uint64_t g_n, std::size_t r3);
/// Two decimals, as tabulated.
std::string format_ratio(double ratio);

struct SpeedupRow {
    int n = 0;
    std::uint64_t g_n = 0;
    std::size_t r2 = 0;
    std::optional<std::size_t> r3;
    std::optional<std::size_t> r3_omega;
    std::optional<double> ratio;
    std::optional<double> ratio_omega;
};

SpeedupRow speedup_table(int n, std::size_t r2, std::optional<std::size_t> r3, std::optional<std::size_t> r3_omega);

/// Line-oriented text dataset format.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

void save_dataset(std::ostream & out, const FilterSet & filters);
void save_dataset(const std::string & path, const FilterSet & filters);
/// Rejects anything that would not re-serialize byte for byte. When
/// `check_outputs` is set, every S line must equal the network's output set
/// over the declared universe.
FilterSet load_dataset(std::istream & in, bool check_outputs = true);
FilterSet load_dataset(const std::string & path, bool check_outputs = true);

std::string serialize(const FilterSet & filters);

} // namespace snf
