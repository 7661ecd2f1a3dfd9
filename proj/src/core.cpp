#include <snf/core.hpp>

#include <algorithm>
#include <bit>

namespace snf {

void check_channels(int n)
{
    if (n < 1 || n > max_channels)
        throw UsageError("channel count " + std::to_string(n) + " outside [1, " + std::to_string(max_channels) + "]");
}

Level::Level(int n) : n_(static_cast<std::uint8_t>(n)) { check_channels(n); }

Level::Level(int n, std::span<const Comparator> comparators) : Level(n)
{
    if (comparators.size() > static_cast<std::size_t>(n / 2))
        throw UsageError("level has more comparators than disjoint channel pairs");
    for (const auto & c : comparators) {
        if (c.lo < 1 || c.lo >= c.hi || c.hi > n)
            throw UsageError("comparator <" + std::to_string(c.lo) + "," + std::to_string(c.hi) +
                             "> is not a min-max comparator on " + std::to_string(n) + " channels");
        const std::uint32_t bits = (std::uint32_t{1} << (c.lo - 1)) | (std::uint32_t{1} << (c.hi - 1));
        if (used_ & bits)
            throw UsageError("comparators in a level must touch disjoint channels");
        used_ |= bits;
        comps_[count_++] = c;
    }
    std::sort(comps_.begin(), comps_.begin() + count_);
}

bool operator==(const Level & a, const Level & b) noexcept
{
    return a.n_ == b.n_ && std::ranges::equal(a.comparators(), b.comparators());
}

std::strong_ordering operator<=>(const Level & a, const Level & b) noexcept
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    const auto x = a.comparators();
    const auto y = b.comparators();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

Network::Network(int n) : n_(n) { check_channels(n); }

Network::Network(int n, std::vector<Level> levels) : Network(n)
{
    for (const auto & l : levels)
        if (l.channels() != n)
            throw UsageError("level channel count differs from network channel count");
    levels_ = std::move(levels);
}

void Network::append(const Level & level)
{
    if (level.channels() != n_)
        throw UsageError("level channel count differs from network channel count");
    levels_.push_back(level);
}

std::strong_ordering operator<=>(const Network & a, const Network & b) noexcept
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.levels_.begin(), a.levels_.end(), b.levels_.begin(),
                                                  b.levels_.end());
}

BitVector::BitVector(Word w, int channels) : word(w), n(channels)
{
    check_channels(n);
    if (std::uint32_t{w} > full_mask(n))
        throw UsageError("bit vector has bits set beyond channel " + std::to_string(n));
}

BitVector BitVector::parse(std::string_view text)
{
    const int n = static_cast<int>(text.size());
    check_channels(n);
    std::uint32_t w = 0;
    for (int i = 0; i < n; ++i) {
        if (text[i] == '1')
            w |= std::uint32_t{1} << i;
        else if (text[i] != '0')
            throw UsageError("bit vector text must contain only 0 and 1");
    }
    return BitVector(static_cast<Word>(w), n);
}

std::string BitVector::to_string() const
{
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((word >> i) & 1U)
            s[i] = '1';
    return s;
}

Permutation::Permutation(int n) : n_(n)
{
    check_channels(n);
    for (int i = 0; i < n; ++i)
        img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(int n, std::span<const int> images)
{
    Permutation p(n);
    if (images.size() != static_cast<std::size_t>(n))
        throw UsageError("permutation needs exactly n images");
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        const int v = images[i];
        if (v < 1 || v > n || (seen >> (v - 1)) & 1U)
            throw UsageError("permutation images must be a bijection on 1..n");
        seen |= std::uint32_t{1} << (v - 1);
        p.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
}

std::vector<int> Permutation::images() const
{
    std::vector<int> r(n_);
    for (int i = 0; i < n_; ++i)
        r[i] = img_[i] + 1;
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r(n_);
    for (int i = 0; i < n_; ++i)
        r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Permutation operator*(const Permutation & a, const Permutation & b)
{
    if (a.n_ != b.n_)
        throw UsageError("cannot compose permutations of different sizes");
    Permutation r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        r.img_[i] = a.img_[b.img_[i]];
    return r;
}

OutputSet::OutputSet(int n) : n_(n) { check_channels(n); }

OutputSet::OutputSet(int n, std::vector<Word> words) : words_(std::move(words)), n_(n)
{
    check_channels(n);
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (!words_.empty() && std::uint32_t{words_.back()} > full_mask(n))
        throw UsageError("output set contains a vector wider than " + std::to_string(n) + " channels");
}

OutputSet OutputSet::from_canonical(int n, std::vector<Word> words)
{
    OutputSet s;
    s.n_ = n;
    s.words_ = std::move(words);
    return s;
}

bool OutputSet::contains(Word w) const noexcept { return std::binary_search(words_.begin(), words_.end(), w); }

bool OutputSet::is_subset_of(const OutputSet & other) const noexcept
{
    return n_ == other.n_ && std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

BitVector apply_level(const BitVector & x, const Level & level)
{
    if (x.n != level.channels())
        throw UsageError("vector and level channel counts differ");
    BitVector r;
    r.word = level.apply(x.word);
    r.n = x.n;
    return r;
}

Evaluation evaluate(const Network & network, const BitVector & x)
{
    if (x.n != network.channels())
        throw UsageError("vector and network channel counts differ");
    std::uint32_t value = x.word;
    std::array<int, max_channels> origin{};
    for (int i = 0; i < x.n; ++i)
        origin[i] = i;
    for (const auto & level : network.levels()) {
        for (const auto & c : level.comparators()) {
            const int a = c.lo - 1;
            const int b = c.hi - 1;
            // Equal values keep their own coordinates.
            if (((value >> a) & 1U) > ((value >> b) & 1U)) {
                value ^= (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
                std::swap(origin[a], origin[b]);
            }
        }
    }
    std::vector<int> images(x.n);
    for (int i = 0; i < x.n; ++i)
        images[i] = origin[i] + 1;
    return {BitVector(static_cast<Word>(value), x.n), Permutation::from_images(x.n, images)};
}

OutputSet output_set(const Network & network, std::span<const Word> inputs)
{
    std::vector<Word> out;
    out.reserve(inputs.size());
    for (Word x : inputs)
        out.push_back(network.apply(x));
    return OutputSet(network.channels(), std::move(out));
}

OutputSet output_set(const Network & network, const OutputSet & inputs)
{
    if (inputs.channels() != network.channels())
        throw UsageError("input set and network channel counts differ");
    return output_set(network, std::span<const Word>(inputs.words()));
}

OutputSet apply_level(const OutputSet & set, const Level & level)
{
    if (set.channels() != level.channels())
        throw UsageError("set and level channel counts differ");
    std::vector<Word> out;
    out.reserve(set.size());
    for (Word x : set)
        out.push_back(level.apply(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return OutputSet::from_canonical(set.channels(), std::move(out));
}

bool is_sorted(const BitVector & x) noexcept { return is_sorted_word(x.word, x.n); }

bool is_sorting_network(const Network & network)
{
    const int n = network.channels();
    for (std::uint32_t x = 0; x <= full_mask(n); ++x)
        if (!is_sorted_word(network.apply(static_cast<Word>(x)), n))
            return false;
    return true;
}

Network concat(const Network & a, const Network & b)
{
    if (a.channels() != b.channels())
        throw UsageError("cannot concatenate networks with different channel counts");
    auto levels = a.levels();
    levels.insert(levels.end(), b.levels().begin(), b.levels().end());
    return Network(a.channels(), std::move(levels));
}

Network concat(const Network & a, const Level & level)
{
    Network r = a;
    r.append(level);
    return r;
}

Word reflect_word(Word w, int n) noexcept
{
    // Reverse the low n bits, then complement them.
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i)
        r |= ((std::uint32_t{w} >> i) & 1U) << (n - 1 - i);
    return static_cast<Word>(~r & full_mask(n));
}

BitVector reflect_vector(const BitVector & x) { return BitVector(reflect_word(x.word, x.n), x.n); }

Level reflect_level(const Level & level)
{
    const int n = level.channels();
    std::vector<Comparator> out;
    for (const auto & c : level.comparators())
        out.push_back({static_cast<std::uint8_t>(n - c.hi + 1), static_cast<std::uint8_t>(n - c.lo + 1)});
    return Level(n, out);
}

Network reflect_network(const Network & network)
{
    std::vector<Level> levels;
    levels.reserve(network.depth());
    for (const auto & l : network.levels())
        levels.push_back(reflect_level(l));
    return Network(network.channels(), std::move(levels));
}

OutputSet reflect_set(const OutputSet & set)
{
    std::vector<Word> out;
    out.reserve(set.size());
    for (Word x : set)
        out.push_back(reflect_word(x, set.channels()));
    return OutputSet(set.channels(), std::move(out));
}

BitVector permute_vector(const Permutation & p, const BitVector & x)
{
    if (p.size() != x.n)
        throw UsageError("permutation and vector sizes differ");
    return BitVector(p.apply(x.word), x.n);
}

OutputSet permute_set(const Permutation & p, const OutputSet & set)
{
    if (p.size() != set.channels())
        throw UsageError("permutation and set sizes differ");
    std::vector<Word> out;
    out.reserve(set.size());
    for (Word x : set)
        out.push_back(p.apply(x));
    return OutputSet(set.channels(), std::move(out));
}

OutputSet sorted_inputs(int n)
{
    check_channels(n);
    std::vector<Word> out;
    for (int ones = 0; ones <= n; ++ones)
        out.push_back(static_cast<Word>(full_mask(n) & ~full_mask(n - ones)));
    return OutputSet(n, std::move(out));
}

OutputSet all_inputs(int n)
{
    check_channels(n);
    std::vector<Word> out(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < out.size(); ++x)
        out[x] = static_cast<Word>(x);
    return OutputSet::from_canonical(n, std::move(out));
}

OutputSet restricted_inputs(int n, int w)
{
    check_channels(n);
    if (w < 0 || w > n)
        throw UsageError("restriction width must lie in [0, n]");
    std::vector<Word> out;
    for (int zeros = 0; zeros <= w; ++zeros) {
        const int ones = w - zeros;
        // First `zeros` channels forced to 0, last `ones` channels forced to 1.
        const std::uint32_t fixed_one = full_mask(n) & ~full_mask(n - ones);
        const std::uint32_t free = full_mask(n) & ~full_mask(zeros) & ~fixed_one;
        // Enumerate all subsets of the free channels.
        std::uint32_t sub = 0;
        do {
            out.push_back(static_cast<Word>(sub | fixed_one));
            sub = (sub - free) & free;
        } while (sub != 0);
    }
    return OutputSet(n, std::move(out));
}

std::string to_string(const Level & level)
{
    std::string s;
    for (const auto & c : level.comparators()) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(c.lo) + '-' + std::to_string(c.hi);
    }
    return s;
}

std::string to_string(const Network & network)
{
    if (network.depth() == 0)
        return "-";
    std::string s;
    for (std::size_t k = 0; k < network.depth(); ++k) {
        if (k)
            s += ';';
        s += to_string(network.levels()[k]);
    }
    return s;
}

} // namespace snf
