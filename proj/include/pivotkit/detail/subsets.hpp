#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pivotkit::detail {

// Visits the k-subsets of {0..n-1} (n <= 64) as bitmasks, in lexicographic
// order of their sorted element lists. Stops early when `visit` returns true;
// the return value says whether it did.
template <typename Visit>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
    if (visit(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Enumerates candidate sides of a separation of the given order on n items:
// sizes order..n/2 ascending, and for balanced splits only the side holding item 0.
template <typename Visit>
bool for_each_separation_side(std::size_t n, std::size_t order, Visit&& visit) {
  for (std::size_t size = order; 2 * size <= n; ++size) {
    const bool balanced = 2 * size == n;
    const bool hit = for_each_subset_of_size(n, size, [&](std::uint64_t mask) {
      if (balanced && (mask & 1U) == 0) return false;
      return visit(mask);
    });
    if (hit) return true;
  }
  return false;
}

}  // namespace pivotkit::detail
