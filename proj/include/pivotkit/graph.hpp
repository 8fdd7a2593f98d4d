#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pivotkit/gf2.hpp"

namespace pivotkit {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Exact non-negative rational, always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return adj_.nrows(); }
  std::size_t edge_count() const noexcept { return adj_.count_ones() / 2; }

  bool has_edge(Vertex u, Vertex v) const { return adj_.get(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  BitVector neighbor_mask(Vertex v) const { return adj_.row(v); }
  VertexSet neighbors(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`, relabelled 0..|keep|-1 in the given order.
  Graph induced(const VertexSet& keep) const;
  Graph without_vertex(Vertex v) const;
  /// Graph with the names of u and v exchanged.
  Graph with_swapped(Vertex u, Vertex v) const;

  const BitMatrix& adjacency() const noexcept { return adj_; }
  /// rows[v] ^= mask and the symmetric column update, for a mask disjoint from v.
  void toggle_row(Vertex v, const BitVector& mask);

  bool is_connected() const;
  /// Two-colouring if the graph is bipartite (colour per vertex, 0 or 1).
  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;

 private:
  BitMatrix adj_;
};

/// Bipartite graph given by its |A| x |B| biadjacency matrix. A-vertex i and
/// B-vertex j are adjacent iff biadjacency(i, j) == 1.
class BiGraph {
 public:
  BiGraph() = default;
  BiGraph(std::size_t a, std::size_t b) : bi_(a, b) {}
  explicit BiGraph(BitMatrix biadjacency) : bi_(std::move(biadjacency)) {}

  static BiGraph complete(std::size_t a, std::size_t b) { return BiGraph(BitMatrix::ones(a, b)); }

  std::size_t size_a() const noexcept { return bi_.nrows(); }
  std::size_t size_b() const noexcept { return bi_.ncols(); }
  std::size_t edge_count() const noexcept { return bi_.count_ones(); }
  bool has_edge(std::size_t i, std::size_t j) const { return bi_.get(i, j); }
  void add_edge(std::size_t i, std::size_t j) { bi_.set(i, j); }

  const BitMatrix& biadjacency() const noexcept { return bi_; }

  /// Same graph as a simple Graph: A-vertex i is vertex i, B-vertex j is vertex |A| + j.
  Graph to_graph() const;

  bool operator==(const BiGraph&) const = default;

 private:
  BitMatrix bi_;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  Rational average_degree;

  bool operator==(const DegreeStats&) const = default;
};

enum class Side { A, B };

/// A K_{s,t} subgraph: `s_side` holds the s vertices, `t_side` the t vertices
/// (indices within their respective sides).
struct CompleteBipartiteWitness {
  Side s_on = Side::A;
  std::vector<std::size_t> s_side;
  std::vector<std::size_t> t_side;
};

BiGraph bipartite_complement(const BiGraph& g);

/// Searches for K_{s,t} with the s-part on either side. Returns nullopt if g is K_{s,t}-free.
std::optional<CompleteBipartiteWitness> find_complete_bipartite(const BiGraph& g, std::size_t s,
                                                                std::size_t t);

/// True iff no two distinct vertices share two or more neighbours.
bool is_c4_free(const Graph& g);

/// Replaces each vertex v by k independent copies v*k .. v*k+k-1.
Graph blow_up(const Graph& g, std::size_t k);

/// Size of a minimum vertex cut; n-1 for complete graphs, 0 for disconnected ones.
std::size_t vertex_connectivity(const Graph& g);

DegreeStats degree_stats(const Graph& g);
DegreeStats degree_stats(const BiGraph& g);

}  // namespace pivotkit
