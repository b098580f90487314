#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "shadowlab/bits.hpp"

namespace shadowlab {

/// Exact binomial coefficient; throws std::overflow_error past int64.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    const std::int64_t num = n - k + j;
    // result * num / j is exact at every step
    if (result > std::numeric_limits<std::int64_t>::max() / num)
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    result = result * num / j;
  }
  return result;
}

/// C(z, k) for real z: prod_{j<k} (z - j) / k!.
inline double generalized_binomial(double z, int k) {
  double value = 1.0;
  for (int j = 0; j < k; ++j) value *= (z - j) / (j + 1);
  return value;
}

/// Falling factorial (l)_k = l (l-1) ... (l-k+1).
inline double falling_factorial(int l, int k) {
  double value = 1.0;
  for (int j = 0; j < k; ++j) value *= (l - j);
  return value;
}

/// Colexicographic rank of a k-subset given as a mask (sum_i C(v_i, i+1)).
inline std::int64_t colex_rank(Mask m) {
  std::int64_t rank = 0;
  int i = 1;
  bits::for_each(m, [&](int v) { rank += binomial(v, i++); });
  return rank;
}

/// Every k-subset of {0..n-1} as a mask, in colex (= numeric) order. n <= 64.
inline std::vector<Mask> all_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n || n > kMaxMaskVertices) return out;
  if (k == 0) return {Mask{0}};
  Mask m = (k == 64) ? ~Mask{0} : (Mask{1} << k) - 1;
  const Mask limit_bit = (n == 64) ? 0 : (Mask{1} << n);
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  while (true) {
    out.push_back(m);
    // Gosper's hack
    const Mask c = m & (~m + 1);
    const Mask rr = m + c;
    if (rr == 0) break;
    m = (((rr ^ m) >> 2) / c) | rr;
    if (n < 64 && (m & ~(limit_bit - 1))) break;
  }
  return out;
}

/// Calls f(const std::vector<int>&) for every k-subset of items, lexicographically.
template <class F>
void for_each_combination(const std::vector<int>& items, int k, F&& f) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    f(chosen);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace shadowlab
