// Test-side reference computations, written independently of src/.
#ifndef LVB_TEST_SUPPORT_HPP
#define LVB_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lvb/core.hpp"

namespace ref {

using lvb::Int;
using lvb::Seq;
using Diagram = std::vector<Seq>;

inline Int fl(Int a, Int b) { return static_cast<Int>(std::floor(static_cast<long double>(a) / b)); }
inline Int ce(Int a, Int b) { return static_cast<Int>(std::ceil(static_cast<long double>(a) / b)); }

// conjugate by drawing the Young diagram box by box
inline Seq conjugate(Seq const & alpha)
{
    Seq c;
    for (Int j = 1;; ++j) {
        Int h = 0;
        for (Int a : alpha)
            if (a >= j)
                ++h;
        if (!h)
            return c;
        c.push_back(h);
    }
}

// E map straight from the column-position definition
inline Diagram e_map(Diagram const & x, int sign = 1)
{
    Diagram y = x;
    std::size_t s = 0;
    for (auto const & r : x)
        s = std::max(s, r.size());
    for (std::size_t j = 0; j < s; ++j) {
        Int h = 0;
        for (auto const & r : x)
            h += r.size() > j;
        Int i = 0;
        for (auto & r : y)
            if (r.size() > j) {
                ++i;
                r[j] += sign * (h - 2 * i + 1);
            }
    }
    return y;
}

inline Seq sorted_desc(Seq v)
{
    std::sort(v.rbegin(), v.rend());
    return v;
}

inline bool columns_decreasing(Diagram const & x)
{
    std::size_t s = 0;
    for (auto const & r : x)
        s = std::max(s, r.size());
    for (std::size_t j = 0; j < s; ++j) {
        bool have = false;
        Int last = 0;
        for (auto const & r : x)
            if (r.size() > j) {
                if (have && r[j] > last)
                    return false;
                have = true;
                last = r[j];
            }
    }
    return true;
}

// every ordered row-length composition of n
inline std::vector<Seq> compositions(Int n)
{
    std::vector<Seq> out;
    std::function<void(Int, Seq &)> rec = [&](Int rest, Seq & cur) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (Int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            rec(rest - k, cur);
            cur.pop_back();
        }
    };
    Seq cur;
    rec(n, cur);
    return out;
}

// every diagram with the given row lengths and entries in [lo, hi]
inline void for_each_filling(Seq const & lengths, Int lo, Int hi,
                             std::function<void(Diagram const &)> const & fn)
{
    Diagram d;
    for (Int l : lengths)
        d.emplace_back(static_cast<std::size_t>(l), lo);
    std::vector<Int *> cells;
    for (auto & r : d)
        for (auto & c : r)
            cells.push_back(&c);
    for (;;) {
        fn(d);
        std::size_t k = 0;
        while (k < cells.size() && *cells[k] == hi) {
            *cells[k] = lo;
            ++k;
        }
        if (k == cells.size())
            return;
        ++*cells[k];
    }
}

// longest subsequence (as index set) with gaps >= 2 and the given anchor
struct MajusculeInfo {
    std::size_t max_len = 0;
    std::vector<Seq> value_seqs;  // distinct value sequences reaching max_len
};

inline MajusculeInfo exhaustive_majuscule(Seq const & clump, int eps)
{
    MajusculeInfo info;
    std::size_t n = clump.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (eps < 0 && !(mask & 1u))
            continue;
        if (eps > 0 && !(mask & (1u << (n - 1))))
            continue;
        Seq v;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k))
                v.push_back(clump[k]);
        bool ok = true;
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            if (v[k] - v[k + 1] < 2)
                ok = false;
        if (!ok)
            continue;
        if (v.size() > info.max_len) {
            info.max_len = v.size();
            info.value_seqs.clear();
        }
        if (v.size() == info.max_len
            && std::find(info.value_seqs.begin(), info.value_seqs.end(), v) == info.value_seqs.end())
            info.value_seqs.push_back(v);
    }
    return info;
}

// the reversal of 0..l-1 followed by count seeded shuffles
inline std::vector<std::vector<std::size_t>> sample_orders(std::size_t l, unsigned seed, int count)
{
    std::vector<std::vector<std::size_t>> out;
    std::mt19937 gen(seed);
    std::vector<std::size_t> p(l);
    for (std::size_t i = 0; i < l; ++i)
        p[i] = i;
    out.push_back(std::vector<std::size_t>(p.rbegin(), p.rend()));
    for (int k = 0; k < count; ++k) {
        std::shuffle(p.begin(), p.end(), gen);
        out.push_back(p);
    }
    return out;
}

}  // namespace ref

#endif
