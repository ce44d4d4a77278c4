#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rigidity {

// Exact binomial coefficient; 0 when k < 0 or k > n. Arguments stay tiny
// (n <= ~40) so the running product never overflows.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

// Calls fn(subset) for every k-subset of pool, in lexicographic position
// order. The subset vector holds pool values and is reused between calls.
// k = 0 yields a single empty subset.
template <class F>
void for_each_combination(std::span<const int> pool, int k, F&& fn) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> subset(k);
    for (;;) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        fn(static_cast<const std::vector<int>&>(subset));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

} // namespace rigidity
