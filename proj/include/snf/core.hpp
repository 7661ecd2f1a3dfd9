#pragma once

// Object model for min-max comparator networks over binary inputs.
//
// Channels are 1-based in the public API (comparators, permutations built
// from images, text formats). Binary vectors are packed into a Word with
// channel i stored at bit (i - 1).

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snf {

inline constexpr int max_channels = 16;
inline constexpr int max_level_size = max_channels / 2;

using Word = std::uint16_t;

/// Thrown when a caller violates a documented precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void check_channels(int n);

constexpr std::uint32_t full_mask(int n) noexcept { return (std::uint32_t{1} << n) - 1; }

struct Comparator {
    std::uint8_t lo = 0;
    std::uint8_t hi = 0;

    friend constexpr auto operator<=>(const Comparator &, const Comparator &) = default;
};

/// A set of comparators on pairwise disjoint channels, kept sorted by (lo, hi).
class Level {
public:
    Level() = default;
    explicit Level(int n);
    Level(int n, std::span<const Comparator> comparators);
    Level(int n, std::initializer_list<Comparator> comparators)
        : Level(n, std::span<const Comparator>(comparators.begin(), comparators.size()))
    {
    }

    int channels() const noexcept { return n_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    std::span<const Comparator> comparators() const noexcept { return {comps_.data(), count_}; }

    /// Channels touched by this level, as a bit mask.
    std::uint32_t used_mask() const noexcept { return used_; }

    Word apply(Word x) const noexcept
    {
        std::uint32_t v = x;
        for (std::size_t k = 0; k < count_; ++k) {
            const std::uint32_t lo = std::uint32_t{1} << (comps_[k].lo - 1);
            const std::uint32_t hi = std::uint32_t{1} << (comps_[k].hi - 1);
            if ((v & lo) && !(v & hi))
                v ^= lo | hi;
        }
        return static_cast<Word>(v);
    }

    friend bool operator==(const Level & a, const Level & b) noexcept;
    /// Lexicographic on the sorted comparator list; a proper prefix orders first.
    friend std::strong_ordering operator<=>(const Level & a, const Level & b) noexcept;

private:
    std::array<Comparator, max_level_size> comps_{};
    std::uint8_t count_ = 0;
    std::uint8_t n_ = 0;
    std::uint32_t used_ = 0;
};

class Network {
public:
    Network() = default;
    explicit Network(int n);
    Network(int n, std::vector<Level> levels);

    int channels() const noexcept { return n_; }
    std::size_t depth() const noexcept { return levels_.size(); }
    const std::vector<Level> & levels() const noexcept { return levels_; }

    void append(const Level & level);

    Word apply(Word x) const noexcept
    {
        for (const auto & l : levels_)
            x = l.apply(x);
        return x;
    }

    friend bool operator==(const Network &, const Network &) = default;
    /// Level-by-level lexicographic order; shallower prefixes order first.
    friend std::strong_ordering operator<=>(const Network & a, const Network & b) noexcept;

private:
    std::vector<Level> levels_;
    int n_ = 0;
};

/// One n-channel binary vector.
struct BitVector {
    Word word = 0;
    int n = 0;

    BitVector() = default;
    BitVector(Word w, int channels);

    /// Channel value, 1-based.
    bool at(int channel) const noexcept { return (word >> (channel - 1)) & 1U; }

    /// Parses "0110"-style strings, channel 1 leftmost.
    static BitVector parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const BitVector &, const BitVector &) = default;
};

/// Bijection on channels. Stored 0-based: image(i) = pi(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);

    /// From 1-based images: images[i-1] = pi(i).
    static Permutation from_images(int n, std::span<const int> images);
    static Permutation from_images(int n, std::initializer_list<int> images)
    {
        return from_images(n, std::span<const int>(images.begin(), images.size()));
    }

    int size() const noexcept { return n_; }
    int image(int i) const noexcept { return img_[i]; }
    /// 1-based images.
    std::vector<int> images() const;

    Word apply(Word x) const noexcept
    {
        std::uint32_t r = 0;
        for (int i = 0; i < n_; ++i)
            r |= ((std::uint32_t{x} >> i) & 1U) << img_[i];
        return static_cast<Word>(r);
    }

    Permutation inverse() const;
    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation & a, const Permutation & b);
    friend bool operator==(const Permutation &, const Permutation &) = default;

private:
    std::array<std::uint8_t, max_channels> img_{};
    int n_ = 0;
};

/// Canonical set of binary vectors: strictly ascending words, all below 2^n.
class OutputSet {
public:
    OutputSet() = default;
    explicit OutputSet(int n);
    /// Sorts and deduplicates.
    OutputSet(int n, std::vector<Word> words);

    /// Caller guarantees `words` is strictly ascending and in range.
    static OutputSet from_canonical(int n, std::vector<Word> words);

    int channels() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word> & words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(Word w) const noexcept;
    bool is_subset_of(const OutputSet & other) const noexcept;

    friend bool operator==(const OutputSet &, const OutputSet &) = default;

private:
    std::vector<Word> words_;
    int n_ = 0;
};

BitVector apply_level(const BitVector & x, const Level & level);

struct Evaluation {
    BitVector value;
    /// perm.image(i) is the 0-based origin coordinate of the value on channel i.
    Permutation perm;
};

Evaluation evaluate(const Network & network, const BitVector & x);

OutputSet output_set(const Network & network, const OutputSet & inputs);
OutputSet output_set(const Network & network, std::span<const Word> inputs);
/// {level(x) | x in set}: the output set of C + level given that of C.
OutputSet apply_level(const OutputSet & set, const Level & level);

constexpr bool is_sorted_word(Word w, int n) noexcept
{
    // 0^l 1^r with channel 1 at the low bit: set bits form one block ending at bit n-1.
    const std::uint32_t v = w;
    return v == 0 || v + (v & (~v + 1)) == (std::uint32_t{1} << n);
}

bool is_sorted(const BitVector & x) noexcept;
bool is_sorting_network(const Network & network);

Network concat(const Network & a, const Network & b);
Network concat(const Network & a, const Level & level);

Word reflect_word(Word w, int n) noexcept;
BitVector reflect_vector(const BitVector & x);
Level reflect_level(const Level & level);
Network reflect_network(const Network & network);
OutputSet reflect_set(const OutputSet & set);

BitVector permute_vector(const Permutation & p, const BitVector & x);
OutputSet permute_set(const Permutation & p, const OutputSet & set);

OutputSet sorted_inputs(int n);
OutputSet all_inputs(int n);
/// Inputs with the first l channels 0 and the last r channels 1, over all l + r = w.
OutputSet restricted_inputs(int n, int w);

std::string to_string(const Level & level);
std::string to_string(const Network & network);

} // namespace snf
