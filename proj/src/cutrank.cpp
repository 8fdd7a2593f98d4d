#include "pivotkit/cutrank.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "pivotkit/detail/subsets.hpp"
#include "pivotkit/error.hpp"

namespace pivotkit {

std::size_t subset_cap() {
  const char* raw = std::getenv("PIVOTKIT_MAX_SUBSET_N");
  if (raw == nullptr || *raw == '\0') return kMaxSubsetN;
  char* end = nullptr;
  const unsigned long parsed = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return kMaxSubsetN;
  return std::min<std::size_t>(kMaxSubsetN, parsed);
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    masks[v] = g.adjacency().row_words(v).empty() ? 0 : g.adjacency().row_words(v)[0];
  }
  return masks;
}

std::size_t cut_rank_masked(const std::vector<std::uint64_t>& adj, std::uint64_t x_mask) {
  Word rows[kWordBits];
  std::size_t count = 0;
  for (std::uint64_t rest = x_mask; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    rows[count++] = adj[static_cast<std::size_t>(v)] & ~x_mask;
  }
  return rank_of_words({rows, count});
}

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

}  // namespace

std::size_t cut_rank(const Graph& g, const VertexSet& x) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_x(n, false);
  for (Vertex v : x) {
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    in_x[v] = true;
  }
  if (n <= kWordBits) {
    std::uint64_t mask = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in_x[v]) mask |= std::uint64_t{1} << v;
    }
    return cut_rank_masked(adjacency_masks(g), mask);
  }
  VertexSet rows;
  VertexSet cols;
  for (Vertex v = 0; v < n; ++v) (in_x[v] ? rows : cols).push_back(v);
  return rank(g.adjacency().submatrix(rows, cols));
}

std::optional<Separation> find_separation_of_rank(const Graph& g, std::size_t order) {
  const std::size_t n = g.vertex_count();
  if (n > subset_cap()) {
    throw Error(ErrorCode::CapExceeded, "separation search limited to " +
                                            std::to_string(subset_cap()) + " vertices");
  }
  if (order == 0) return std::nullopt;
  const auto adj = adjacency_masks(g);
  std::optional<Separation> found;
  detail::for_each_separation_side(n, order, [&](std::uint64_t mask) {
    const std::size_t r = cut_rank_masked(adj, mask);
    if (r >= order) return false;
    found = Separation{mask_to_set(mask), order, r};
    return true;
  });
  return found;
}

std::optional<Separation> find_low_rank_separation(const Graph& g, std::size_t k) {
  for (std::size_t order = 1; order < k; ++order) {
    if (auto sep = find_separation_of_rank(g, order)) return sep;
  }
  return std::nullopt;
}

}  // namespace pivotkit
