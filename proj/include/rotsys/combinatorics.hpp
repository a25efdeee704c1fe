#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace rotsys {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Advances `c` (sorted, values in [0, n)) to the next k-subset in
// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Calls fn(const std::vector<int>&) for every k-subset of [0, n) in
// lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  do {
    fn(static_cast<const std::vector<int>&>(c));
  } while (k > 0 && next_combination(c, n));
}

// Same, over an explicit ground set.
template <class Fn>
void for_each_subset_of(const std::vector<int>& ground, int k, Fn&& fn) {
  std::vector<int> chosen(k);
  for_each_subset(static_cast<int>(ground.size()), k, [&](const std::vector<int>& idx) {
    for (int i = 0; i < k; ++i) chosen[i] = ground[idx[i]];
    fn(static_cast<const std::vector<int>&>(chosen));
  });
}

// Sign of the permutation sorting three distinct values: true if even.
inline bool even_order(int b, int c, int d) {
  int inversions = (b > c) + (b > d) + (c > d);
  return inversions % 2 == 0;
}

}  // namespace rotsys
