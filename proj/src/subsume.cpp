#include <snf/subsume.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace snf {

SetSignature signature(const OutputSet & set)
{
    const int n = set.channels();
    SetSignature sig;
    sig.n = n;
    sig.weight_hist.assign(n + 1, 0);
    sig.channel_profile.assign(n * (n + 1), 0);
    for (Word x : set) {
        const int k = std::popcount(static_cast<unsigned>(x));
        ++sig.weight_hist[k];
        for (std::uint32_t bits = x; bits != 0; bits &= bits - 1)
            ++sig.channel_profile[std::countr_zero(bits) * (n + 1) + k];
    }
    return sig;
}

namespace {

constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h * 0xff51afd7ed558ccdULL;
}

} // namespace

std::uint64_t permutation_invariant_hash(const SetSignature & sig)
{
    const int width = sig.n + 1;
    std::vector<std::span<const std::uint32_t>> rows;
    rows.reserve(sig.n);
    for (int i = 0; i < sig.n; ++i)
        rows.emplace_back(sig.channel_profile.data() + i * width, width);
    std::sort(rows.begin(), rows.end(),
              [](auto x, auto y) { return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()); });
    std::uint64_t h = static_cast<std::uint64_t>(sig.n);
    for (auto c : sig.weight_hist)
        h = mix(h, c);
    for (auto row : rows)
        for (auto c : row)
            h = mix(h, c);
    return h;
}

PreparedSet::PreparedSet(const OutputSet & set)
    : set_(&set), sig_(signature(set)), bitmap_(((std::size_t{1} << set.channels()) + 63) / 64, 0)
{
    for (Word x : set)
        bitmap_[x >> 6] |= std::uint64_t{1} << (x & 63);
    hash_ = permutation_invariant_hash(sig_);
}

bool weight_dominated(const SetSignature & a, const SetSignature & b) noexcept
{
    if (a.n != b.n)
        return false;
    for (int k = 0; k <= a.n; ++k)
        if (a.weight_hist[k] > b.weight_hist[k])
            return false;
    return true;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const PreparedSet & a, const PreparedSet & b) : a_(a), b_(b), n_(a.set().channels()) {}

    std::optional<Permutation> run()
    {
        if (!compute_candidates())
            return std::nullopt;
        keys_.reserve(a_.set().size());
        for (Word x : a_.set())
            keys_.push_back(static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(x))) << n_);
        b_keys_.reserve(b_.set().size());
        for (Word y : b_.set())
            b_keys_.push_back((static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(y))) << n_) | y);
        auto & counts = scratch_counts();
        if (counts.size() < (std::size_t{1} << n_) * (n_ + 1))
            counts.assign((std::size_t{1} << n_) * (n_ + 1), 0);
        counts_ = counts.data();
        assignment_.fill(-1);
        if (!search(0))
            return std::nullopt;
        std::vector<int> images(n_);
        for (int i = 0; i < n_; ++i)
            images[i] = assignment_[i] + 1;
        return Permutation::from_images(n_, images);
    }

private:
    bool compute_candidates()
    {
        const auto & sa = a_.sig();
        const auto & sb = b_.sig();
        for (int i = 0; i < n_; ++i) {
            std::uint32_t mask = 0;
            for (int j = 0; j < n_; ++j) {
                bool ok = true;
                for (int k = 0; k <= n_ && ok; ++k) {
                    const auto pa = sa.profile(i, k);
                    const auto pb = sb.profile(j, k);
                    ok = pa <= pb && sa.weight_hist[k] - pa <= sb.weight_hist[k] - pb;
                }
                if (ok)
                    mask |= std::uint32_t{1} << j;
            }
            if (mask == 0)
                return false;
            candidates_[i] = mask;
        }
        return true;
    }

    static std::vector<std::int32_t> & scratch_counts()
    {
        thread_local std::vector<std::int32_t> counts;
        return counts;
    }

    // Multiset of (weight, image restricted to assigned targets) over A must
    // fit inside the same projection of B.
    bool projection_fits()
    {
        const std::uint32_t mask = (~std::uint32_t{0} << n_) | used_targets_;
        for (auto kb : b_keys_)
            ++counts_[kb & mask];
        bool fits = true;
        for (auto ka : keys_)
            if (--counts_[ka] < 0) {
                fits = false;
                break;
            }
        for (auto kb : b_keys_)
            counts_[kb & mask] = 0;
        for (auto ka : keys_)
            counts_[ka] = 0;
        return fits;
    }

    bool complete_image_fits() const
    {
        for (auto key : keys_)
            if (!b_.contains(key & full_mask(n_)))
                return false;
        return true;
    }

    bool search(int depth)
    {
        if (depth == n_)
            return complete_image_fits();

        // Most constrained unassigned source channel first.
        int source = -1;
        int best = n_ + 1;
        for (int i = 0; i < n_; ++i) {
            if (assignment_[i] >= 0)
                continue;
            const int c = std::popcount(candidates_[i] & ~used_targets_);
            if (c < best) {
                best = c;
                source = i;
            }
        }
        if (best == 0)
            return false;

        const auto & words = a_.set().words();
        for (std::uint32_t options = candidates_[source] & ~used_targets_; options != 0; options &= options - 1) {
            const int target = std::countr_zero(options);
            const std::uint32_t tbit = std::uint32_t{1} << target;
            assignment_[source] = target;
            used_targets_ |= tbit;
            for (std::size_t t = 0; t < words.size(); ++t)
                if ((words[t] >> source) & 1U)
                    keys_[t] |= tbit;

            const bool last = depth + 1 == n_;
            if ((last || depth == 0 || projection_fits()) && search(depth + 1))
                return true;

            for (auto & key : keys_)
                key &= ~tbit;
            used_targets_ &= ~tbit;
            assignment_[source] = -1;
        }
        return false;
    }

    const PreparedSet & a_;
    const PreparedSet & b_;
    int n_;
    std::array<std::uint32_t, max_channels> candidates_{};
    std::array<int, max_channels> assignment_{};
    std::uint32_t used_targets_ = 0;
    std::vector<std::uint32_t> keys_;
    std::vector<std::uint32_t> b_keys_;
    std::int32_t * counts_ = nullptr;
};

bool maps_into(const Permutation & p, const OutputSet & a, const PreparedSet & b)
{
    return std::all_of(a.begin(), a.end(), [&](Word x) { return b.contains(p.apply(x)); });
}

} // namespace

std::optional<Permutation> find_embedding(const PreparedSet & a, const PreparedSet & b)
{
    const int n = a.set().channels();
    if (n != b.set().channels())
        throw UsageError("embedding needs sets over the same channel count");
    const Permutation identity(n);
    if (a.set().empty())
        return identity;
    if (!weight_dominated(a.sig(), b.sig()))
        return std::nullopt;
    if (maps_into(identity, a.set(), b))
        return identity;

    auto found = EmbeddingSearch(a, b).run();
    assert(!found || maps_into(*found, a.set(), b));
    return found;
}

std::optional<Permutation> find_embedding(const OutputSet & a, const OutputSet & b)
{
    return find_embedding(PreparedSet(a), PreparedSet(b));
}

std::optional<Permutation> brute_force_embedding(const OutputSet & a, const OutputSet & b)
{
    const int n = a.channels();
    if (n != b.channels())
        throw UsageError("embedding needs sets over the same channel count");
    if (n > 8)
        throw UsageError("brute-force embedding is limited to n <= 8");
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        const auto p = Permutation::from_images(n, images);
        if (std::all_of(a.begin(), a.end(), [&](Word x) { return b.contains(p.apply(x)); }))
            return p;
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
}

} // namespace snf
