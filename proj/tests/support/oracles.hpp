#pragma once

// Test-side oracles, deliberately independent of the library's enumeration
// machinery: counts come from the cycle index of the relabeling action
// (Burnside), not from generating and canonicalizing patterns.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

// Number of all-loops patterns on n vertices up to relabeling, bucketed by
// arc count q. For each permutation, the generating function of fixed arc
// sets is the product of (1 + x^len) over the cycles of the induced action
// on ordered pairs; averaging over S_n gives the bucket sizes.
inline std::vector<long long> all_loops_buckets(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cells.emplace_back(i, j);
    const int m = static_cast<int>(cells.size());

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<long long> acc(m + 1, 0);
    long long group = 0;
    do {
        ++group;
        std::vector<long long> poly{1};
        std::vector<bool> seen(cells.size(), false);
        for (std::size_t s = 0; s < cells.size(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            std::size_t cur = s;
            do {
                seen[cur] = true;
                ++len;
                std::pair<int, int> img{perm[cells[cur].first], perm[cells[cur].second]};
                cur = static_cast<std::size_t>(
                    std::find(cells.begin(), cells.end(), img) - cells.begin());
            } while (cur != s);
            std::vector<long long> next(poly.size() + static_cast<std::size_t>(len), 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k];
                next[k + static_cast<std::size_t>(len)] += poly[k];
            }
            poly = std::move(next);
        }
        poly.resize(static_cast<std::size_t>(m) + 1, 0);
        for (int k = 0; k <= m; ++k) acc[static_cast<std::size_t>(k)] += poly[static_cast<std::size_t>(k)];
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (long long& v : acc) v /= group;  // Burnside: division is exact
    return acc;
}

// Patterns with free loop sets: isomorphism classes of binary relations,
// i.e. 2^(cycles of the action on all n^2 cells) averaged over S_n.
inline long long relation_count(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells.emplace_back(i, j);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0, group = 0;
    do {
        ++group;
        int cycles = 0;
        std::vector<bool> seen(cells.size(), false);
        for (std::size_t s = 0; s < cells.size(); ++s) {
            if (seen[s]) continue;
            ++cycles;
            std::size_t cur = s;
            do {
                seen[cur] = true;
                std::pair<int, int> img{perm[cells[cur].first], perm[cells[cur].second]};
                cur = static_cast<std::size_t>(
                    std::find(cells.begin(), cells.end(), img) - cells.begin());
            } while (cur != s);
        }
        total += 1LL << cycles;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / group;
}

}  // namespace oracle
