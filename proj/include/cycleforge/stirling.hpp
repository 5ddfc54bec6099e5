#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cycleforge {

// Row n of the signless Stirling numbers of the first kind:
// c(n, k) for k = 0..n, built from c(n+1, k) = n c(n, k) + c(n, k-1)
// with c(0, 0) = 1. c(n, k) counts the permutations of n elements
// with exactly k cycles.
inline std::vector<Integer> stirling_first_row(int n) {
  if (n < 0) throw std::invalid_argument("stirling_first_row: negative n");
  std::vector<Integer> row{1};
  for (int m = 0; m < n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 2);
    for (int k = 0; k <= m + 1; ++k) {
      Integer v = 0;
      if (k <= m) v += m * row[static_cast<std::size_t>(k)];
      if (k >= 1) v += row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row;
}

// c(n, k); 0 outside 0 <= k <= n.
inline Integer stirling_first(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling_first: negative n");
  if (k < 0 || k > n) return 0;
  return stirling_first_row(n)[static_cast<std::size_t>(k)];
}

}  // namespace cycleforge
