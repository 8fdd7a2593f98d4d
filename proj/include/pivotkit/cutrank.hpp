#pragma once

#include <cstddef>
#include <optional>

#include "pivotkit/graph.hpp"

namespace pivotkit {

/// Hard ceiling on the vertex (or element) count of exhaustive subset searches.
inline constexpr std::size_t kMaxSubsetN = 24;

/// Effective subset-search cap: kMaxSubsetN, lowered (never raised) by the
/// PIVOTKIT_MAX_SUBSET_N environment variable.
std::size_t subset_cap();

/// A vertex bipartition (side_x, V - side_x) of cut-rank < order with both
/// sides of size >= order.
struct Separation {
  VertexSet side_x;
  std::size_t order = 0;
  std::size_t cutrank_value = 0;

  bool operator==(const Separation&) const = default;
};

/// GF(2) rank of the X x (V - X) adjacency matrix. Duplicates in x are ignored.
std::size_t cut_rank(const Graph& g, const VertexSet& x);

/// First separation of rank `order`: subsets ordered by size, then
/// lexicographically; of two complementary sets only the one containing the
/// lowest vertex is tried. Throws ErrorCode::CapExceeded above subset_cap().
std::optional<Separation> find_separation_of_rank(const Graph& g, std::size_t order);

/// Witness that g is not k-rank-connected (least order first), or nullopt if it is.
std::optional<Separation> find_low_rank_separation(const Graph& g, std::size_t k);

inline bool is_k_rank_connected(const Graph& g, std::size_t k) {
  return !find_low_rank_separation(g, k).has_value();
}

}  // namespace pivotkit
