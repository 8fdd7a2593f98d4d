#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pivotkit/gf2.hpp"
#include "pivotkit/graph.hpp"

namespace pivotkit {

/// Matroid elements and multigraph edges are named by distinct non-negative integers.
using Element = int;
/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

struct MultiEdge {
  Element label = 0;
  std::size_t u = 0;
  std::size_t v = 0;

  bool operator==(const MultiEdge&) const = default;
};

/// Multigraph on vertices 0..n-1; loops and parallel edges are allowed.
struct MultiGraph {
  std::size_t n = 0;
  std::vector<MultiEdge> edges;

  const MultiEdge* find(Element label) const;
  bool operator==(const MultiGraph&) const = default;
};

/// Edge labels of a spanning tree of some MultiGraph.
struct SpanningTree {
  ElementSet edges;

  bool contains(Element label) const;
  bool operator==(const SpanningTree&) const = default;
};

/// Binary matroid with representation [I | rep]: rows of `rep` are indexed by
/// the basis, columns by the remaining elements. The ground set is ordered by
/// ascending label; fundamental graphs use that order for their vertices.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  BinaryMatroid(std::vector<Element> basis, std::vector<Element> cobasis, BitMatrix rep);

  const std::vector<Element>& basis() const noexcept { return basis_; }
  const std::vector<Element>& cobasis() const noexcept { return cobasis_; }
  const BitMatrix& rep() const noexcept { return rep_; }
  ElementSet ground() const;
  std::size_t size() const noexcept { return basis_.size() + cobasis_.size(); }
  std::size_t rank() const noexcept { return basis_.size(); }

  bool contains(Element e) const;
  bool in_basis(Element e) const;
  /// Row of a basis element or column of a non-basis element.
  std::size_t row_of(Element e) const;
  std::size_t col_of(Element e) const;

  BiGraph fundamental_bigraph() const { return BiGraph(rep_); }
  /// Fundamental graph on |E| vertices; vertex i is the i-th element of ground().
  Graph fundamental_graph() const;

  bool operator==(const BinaryMatroid&) const = default;

 private:
  std::vector<Element> basis_;
  std::vector<Element> cobasis_;
  BitMatrix rep_;
};

/// Fundamental matrix of g with respect to tree: rows are tree edges and
/// columns non-tree edges, both in edge-list order; entry (i, j) is 1 iff the
/// cycle of tree + j uses i. Computed by walking tree paths.
BitMatrix fundamental_matrix(const MultiGraph& g, const SpanningTree& tree);

/// Graphic matroid with basis E(T). Throws NotConnected / NotASpanningTree.
BinaryMatroid graphic_matroid(const MultiGraph& g, const SpanningTree& tree);
/// Cographic matroid with basis E(G) - E(T) and representation D^T.
BinaryMatroid cographic_matroid(const MultiGraph& g, const SpanningTree& tree);

/// Exchanges basis element x for non-basis element y. Throws PivotOnZero when
/// rep(x, y) == 0, i.e. when B - x + y is not a basis.
BinaryMatroid change_basis(const BinaryMatroid& m, Element x, Element y);

/// Largest ground set accepted by circuits().
inline constexpr std::size_t kCircuitMaxElements = 20;

/// All circuits, each sorted, in lexicographic order.
std::vector<ElementSet> circuits(const BinaryMatroid& m);

/// M \ deletions / contractions. Loops are deleted when asked to be contracted
/// and coloops contracted when asked to be deleted.
BinaryMatroid minor(const BinaryMatroid& m, const ElementSet& deletions,
                    const ElementSet& contractions);

/// rk(D[X_B, Y_C]) + rk(D[Y_B, X_C]).
std::size_t lambda(const BinaryMatroid& m, const ElementSet& x);

struct LambdaWitness {
  ElementSet x;
  std::size_t order = 0;
  std::size_t lambda_value = 0;

  bool operator==(const LambdaWitness&) const = default;
};

struct ConnectivityResult {
  bool connected = true;
  std::optional<LambdaWitness> witness;
};

/// Checks that no X with |X|, |E - X| >= l has lambda(X) < l, for l = 1..k-1.
/// Enumerates like find_low_rank_separation over ground positions.
ConnectivityResult is_k_connected(const BinaryMatroid& m, std::size_t k);

}  // namespace pivotkit
