#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pivotkit/graph.hpp"

namespace pivotkit {

/// Pivots the edge xy: with V1 = N(x)-N(y)-y, V2 = N(y)-N(x)-x and
/// V3 = N(x)&N(y), complements the edges between each pair of regions, then
/// exchanges the names x and y. Throws ErrorCode::NotAnEdge if xy is not an edge.
Graph pivot(const Graph& g, Vertex x, Vertex y);

/// All labelled graphs reachable from g by pivots, in breadth-first discovery
/// order (g first). Throws ErrorCode::OrbitBudgetExceeded past max_size graphs.
std::vector<Graph> pivot_orbit(const Graph& g, std::size_t max_size);

/// Largest vertex count supported by canonical_form.
inline constexpr std::size_t kCanonicalMaxVertices = 11;

/// Complete isomorphism invariant: the vertex count plus the lexicographically
/// least upper-triangle adjacency code over all relabellings consistent with a
/// refined degree ordering.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

struct MinorStep {
  enum class Kind { Pivot, Delete };
  Kind kind = Kind::Delete;
  // Original vertex names of g; `b` is unused for deletions.
  Vertex a = 0;
  Vertex b = 0;

  bool operator==(const MinorStep&) const = default;
};

struct PivotMinorResult {
  bool found = false;
  std::vector<MinorStep> witness;
  std::size_t states_explored = 0;
};

/// Breadth-first search over isomorphism classes reachable from g by pivots
/// and vertex deletions. `budget` bounds the number of distinct states; when it
/// runs out before the search is decided, ErrorCode::SearchBudgetExceeded is thrown.
PivotMinorResult is_pivot_minor(const Graph& h, const Graph& g, std::size_t budget);

/// Applies a witness sequence to g, naming vertices by their original index.
/// Returns the resulting graph with its remaining vertices in ascending name order.
Graph apply_minor_steps(const Graph& g, const std::vector<MinorStep>& steps);

std::string to_string(const MinorStep& step);

}  // namespace pivotkit
