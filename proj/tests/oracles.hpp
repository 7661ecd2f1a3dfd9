#pragma once

// Slow, independent reference implementations. They share nothing with the
// library beyond its value types: vectors are plain int arrays, networks are
// lists of (i, j) pairs, sets are std::set of strings.

#include <snf/core.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>; // 1-based, one level
using Net = std::vector<Pairs>;
using Vec = std::vector<int>;
using Set = std::set<std::string>;

inline Vec unpack(snf::Word w, int n)
{
    Vec v(n);
    for (int i = 0; i < n; ++i)
        v[i] = (w >> i) & 1;
    return v;
}

inline std::string str(const Vec & v)
{
    std::string s;
    for (int x : v)
        s += static_cast<char>('0' + x);
    return s;
}

inline Vec run(const Net & net, Vec v)
{
    for (const auto & level : net)
        for (auto [i, j] : level)
            if (v[i - 1] > v[j - 1])
                std::swap(v[i - 1], v[j - 1]);
    return v;
}

/// Output strings of `net` over every input word of the given list.
inline Set outputs(const Net & net, int n, const std::vector<snf::Word> & inputs)
{
    Set s;
    for (auto w : inputs)
        s.insert(str(run(net, unpack(w, n))));
    return s;
}

inline std::vector<snf::Word> every_input(int n)
{
    std::vector<snf::Word> all(std::size_t{1} << n);
    std::iota(all.begin(), all.end(), snf::Word{0});
    return all;
}

/// B|w straight from the definition: x_1..x_l = 0, x_{n-r+1}..x_n = 1, l + r = w.
inline std::vector<snf::Word> restricted(int n, int w)
{
    std::vector<snf::Word> out;
    for (auto x : every_input(n)) {
        const auto v = unpack(x, n);
        bool ok = false;
        for (int l = 0; l <= w && !ok; ++l) {
            const int r = w - l;
            bool fits = true;
            for (int i = 0; i < l; ++i)
                fits = fits && v[i] == 0;
            for (int i = n - r; i < n; ++i)
                fits = fits && v[i] == 1;
            ok = fits;
        }
        if (ok)
            out.push_back(x);
    }
    return out;
}

inline Set as_strings(const snf::OutputSet & s)
{
    Set out;
    for (auto w : s)
        out.insert(str(unpack(w, s.channels())));
    return out;
}

inline Net to_net(const snf::Network & net)
{
    Net out;
    for (const auto & level : net.levels()) {
        Pairs p;
        for (auto c : level.comparators())
            p.emplace_back(c.lo, c.hi);
        out.push_back(p);
    }
    return out;
}

inline snf::Network from_net(int n, const Net & net)
{
    std::vector<snf::Level> levels;
    for (const auto & p : net) {
        std::vector<snf::Comparator> comps;
        for (auto [i, j] : p)
            comps.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
        levels.emplace_back(n, comps);
    }
    return snf::Network(n, levels);
}

/// Matchings of K_n by brute force over subsets of the edge list.
inline std::vector<Pairs> matchings(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    std::vector<Pairs> out;
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Pairs p;
        int used = 0;
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!((mask >> e) & 1))
                continue;
            const int bits = (1 << edges[e].first) | (1 << edges[e].second);
            ok = !(used & bits);
            used |= bits;
            p.push_back(edges[e]);
        }
        if (ok)
            out.push_back(p);
    }
    return out;
}

/// sum_k n! / ((n - 2k)! 2^k k!)
inline std::uint64_t telephone(int n)
{
    std::uint64_t total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        // n! / ((n-2k)! 2^k k!) = C(n, 2k) * (2k-1)!!
        std::uint64_t c = 1;
        for (int i = 1; i <= 2 * k; ++i)
            c = c * static_cast<std::uint64_t>(n - 2 * k + i) / static_cast<std::uint64_t>(i);
        std::uint64_t dbl = 1;
        for (int i = 2 * k - 1; i > 1; i -= 2)
            dbl *= static_cast<std::uint64_t>(i);
        total += c * dbl;
    }
    return total;
}

inline bool sorted(const std::string & s) { return std::is_sorted(s.begin(), s.end()); }

/// pi(A) within B for some pi, trying all n! permutations on strings.
inline bool embeds(const Set & a, const Set & b, int n)
{
    if (a.size() > b.size())
        return false;
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool ok = true;
        for (const auto & x : a) {
            std::string y(n, '0');
            for (int i = 0; i < n; ++i)
                y[pi[i]] = x[i];
            if (!b.count(y)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

inline Set reflect(const Set & s)
{
    Set out;
    for (auto x : s) {
        std::reverse(x.begin(), x.end());
        for (auto & c : x)
            c = c == '0' ? '1' : '0';
        out.insert(x);
    }
    return out;
}

/// Minimal-up-to-permutation flags straight from the ordering rule: i is
/// minimal iff no j embeds into i with |F_j| < |F_i|, or equal size and j < i.
inline std::vector<bool> minimal_flags(const std::vector<Set> & sets, int n)
{
    std::vector<bool> keep(sets.size(), true);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size() && keep[i]; ++j) {
            if (j == i)
                continue;
            const bool ranked = sets[j].size() < sets[i].size() || (sets[j].size() == sets[i].size() && j < i);
            if (ranked && embeds(sets[j], sets[i], n))
                keep[i] = false;
        }
    return keep;
}

/// Plain depth-k suffix search over every nonempty level: no memo, no pruning.
inline bool extends(const Set & s, int k, const std::vector<Pairs> & levels)
{
    if (std::all_of(s.begin(), s.end(), sorted))
        return true;
    if (k == 0)
        return false;
    for (const auto & level : levels) {
        if (level.empty())
            continue;
        Set next;
        for (const auto & x : s) {
            std::string y = x;
            for (auto [i, j] : level)
                if (y[i - 1] > y[j - 1])
                    std::swap(y[i - 1], y[j - 1]);
            next.insert(y);
        }
        if (extends(next, k - 1, levels))
            return true;
    }
    return false;
}

inline snf::Level random_level(int n, std::mt19937_64 & rng)
{
    std::vector<int> ch(n);
    std::iota(ch.begin(), ch.end(), 1);
    std::shuffle(ch.begin(), ch.end(), rng);
    const int k = std::uniform_int_distribution<int>(0, n / 2)(rng);
    std::vector<snf::Comparator> comps;
    for (int i = 0; i < k; ++i) {
        const int a = ch[2 * i], b = ch[2 * i + 1];
        comps.push_back({static_cast<std::uint8_t>(std::min(a, b)), static_cast<std::uint8_t>(std::max(a, b))});
    }
    return snf::Level(n, comps);
}

inline snf::Network random_network(int n, int depth, std::mt19937_64 & rng)
{
    std::vector<snf::Level> levels;
    for (int d = 0; d < depth; ++d)
        levels.push_back(random_level(n, rng));
    return snf::Network(n, levels);
}

inline snf::Permutation random_permutation(int n, std::mt19937_64 & rng)
{
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return snf::Permutation::from_images(n, img);
}

} // namespace oracle
