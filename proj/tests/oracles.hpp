#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library's algorithms; they work on plain vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pivotkit/extremal.hpp"
#include "pivotkit/graph.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/structure.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline Rows to_rows(const pivotkit::BitMatrix& m) {
  Rows r(m.nrows(), std::vector<int>(m.ncols(), 0));
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    for (std::size_t j = 0; j < m.ncols(); ++j) r[i][j] = m.get(i, j) ? 1 : 0;
  }
  return r;
}

/// Gaussian elimination over GF(2) on an int matrix.
inline std::size_t rank(Rows a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c] == 1) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    ++r;
  }
  return r;
}

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const pivotkit::Graph& g) {
  const std::size_t n = g.vertex_count();
  Adj a(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) a[u][v] = g.has_edge(u, v) ? 1 : 0;
  }
  return a;
}

inline pivotkit::Graph from_adjacency(const Adj& a) {
  pivotkit::Graph g(a.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      if (a[u][v]) g.add_edge(u, v);
    }
  }
  return g;
}

/// Cut-rank from the definition, with X given as a bitmask.
inline std::size_t cut_rank(const Adj& a, std::uint64_t mask) {
  Rows m;
  const std::size_t n = a.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!((mask >> u) & 1U)) continue;
    std::vector<int> row;
    for (std::size_t v = 0; v < n; ++v) {
      if (!((mask >> v) & 1U)) row.push_back(a[u][v]);
    }
    m.push_back(row);
  }
  if (m.empty() || m[0].empty()) return 0;
  return rank(m);
}

/// Pivot written directly from the three-region definition.
inline Adj pivot(const Adj& a, std::size_t x, std::size_t y) {
  const std::size_t n = a.size();
  std::vector<int> region(n, 0);  // 1: V1, 2: V2, 3: V3
  for (std::size_t v = 0; v < n; ++v) {
    if (v == x || v == y) continue;
    const bool nx = a[x][v] != 0;
    const bool ny = a[y][v] != 0;
    if (nx && !ny) region[v] = 1;
    if (ny && !nx) region[v] = 2;
    if (nx && ny) region[v] = 3;
  }
  Adj b = a;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || region[u] == 0 || region[v] == 0 || region[u] == region[v]) continue;
      b[u][v] ^= 1;
    }
  }
  // Exchange the names x and y.
  Adj c = b;
  const auto name = [&](std::size_t v) { return v == x ? y : v == y ? x : v; };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) c[name(u)][name(v)] = b[u][v];
  }
  return c;
}

/// K_{s,t} with s vertices on either side, by enumerating s-subsets.
inline bool has_complete_bipartite(const Rows& bi, std::size_t s, std::size_t t) {
  const auto one_side = [](const Rows& m, std::size_t s_, std::size_t t_) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    if (s_ > rows) return false;
    std::vector<int> pick(rows, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s_), 1);
    std::sort(pick.begin(), pick.end());
    do {
      std::size_t common = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        bool all = true;
        for (std::size_t i = 0; i < rows; ++i) {
          if (pick[i] && !m[i][j]) all = false;
        }
        if (all) ++common;
      }
      if (common >= t_) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
  };
  Rows tr;
  if (!bi.empty()) {
    tr.assign(bi[0].size(), std::vector<int>(bi.size(), 0));
    for (std::size_t i = 0; i < bi.size(); ++i) {
      for (std::size_t j = 0; j < bi[0].size(); ++j) tr[j][i] = bi[i][j];
    }
  }
  return one_side(bi, s, t) || one_side(tr, s, t);
}

/// Connectedness of the graph induced on `alive`.
inline bool connected_on(const Adj& a, const std::vector<int>& alive) {
  const std::size_t n = a.size();
  std::size_t start = n;
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      ++count;
      if (start == n) start = v;
    }
  }
  if (count <= 1) return true;
  std::vector<int> seen(n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && !seen[v] && a[u][v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == count;
}

/// Least number of vertices whose removal disconnects the graph; n - 1 if none does.
inline std::size_t vertex_connectivity(const Adj& a) {
  const std::size_t n = a.size();
  if (n <= 1) return 0;
  std::vector<int> all(n, 1);
  if (!connected_on(a, all)) return 0;
  std::size_t best = n - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best || size + 2 > n) continue;
    std::vector<int> alive(n, 1);
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) alive[v] = 0;
    }
    if (!connected_on(a, alive)) best = size;
  }
  return best;
}

inline bool c4_free(const Adj& a) {
  const std::size_t n = a.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < n; ++w) common += (a[u][w] && a[v][w]) ? 1 : 0;
      if (common >= 2) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------ graphs with trees

struct Edge {
  int label;
  std::size_t u;
  std::size_t v;
};

inline std::vector<Edge> edges_of(const pivotkit::MultiGraph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges) out.push_back({e.label, e.u, e.v});
  return out;
}

/// True if the edge subset forms a single cycle: every vertex has even degree
/// 0 or 2 (a loop counts twice) and the edges are connected.
inline bool is_cycle(std::size_t n, const std::vector<Edge>& edges) {
  if (edges.empty()) return false;
  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (const int d : degree) {
    if (d != 0 && d != 2) return false;
  }
  // Union-find connectivity of the edge set.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.u)] = find(e.v);
  const std::size_t root = find(edges[0].u);
  for (const auto& e : edges) {
    if (find(e.u) != root) return false;
  }
  return true;
}

/// Edge-label sets of all cycles, by enumerating every edge subset.
inline std::set<std::vector<int>> cycles(const pivotkit::MultiGraph& g) {
  const auto edges = edges_of(g);
  std::set<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1U) pick.push_back(edges[i]);
    }
    if (!is_cycle(g.n, pick)) continue;
    std::vector<int> labels;
    for (const auto& e : pick) labels.push_back(e.label);
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

/// Fundamental matrix through the cycle space: for each non-tree edge e the
/// unique subset S of tree edges with S + e of even degree everywhere.
inline Rows fundamental_matrix(const pivotkit::MultiGraph& g, const pivotkit::SpanningTree& tree) {
  std::vector<Edge> tree_edges;
  std::vector<Edge> other;
  for (const auto& e : edges_of(g)) (tree.contains(e.label) ? tree_edges : other).push_back(e);
  Rows d(tree_edges.size(), std::vector<int>(other.size(), 0));
  for (std::size_t j = 0; j < other.size(); ++j) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tree_edges.size()); ++mask) {
      std::vector<int> degree(g.n, 0);
      ++degree[other[j].u];
      ++degree[other[j].v];
      for (std::size_t i = 0; i < tree_edges.size(); ++i) {
        if ((mask >> i) & 1U) {
          ++degree[tree_edges[i].u];
          ++degree[tree_edges[i].v];
        }
      }
      if (std::all_of(degree.begin(), degree.end(), [](int x) { return x % 2 == 0; })) {
        for (std::size_t i = 0; i < tree_edges.size(); ++i) d[i][j] = static_cast<int>((mask >> i) & 1U);
        break;
      }
    }
  }
  return d;
}

/// Graph deletion/contraction on a multigraph; contraction merges endpoints.
inline pivotkit::MultiGraph graph_minor(const pivotkit::MultiGraph& g, const std::vector<int>& del,
                                        const std::vector<int>& con) {
  std::vector<std::size_t> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  const auto in = [](const std::vector<int>& set, int x) { return std::find(set.begin(), set.end(), x) != set.end(); };
  for (const auto& e : g.edges) {
    if (in(con, e.label)) parent[find(e.u)] = find(e.v);
  }
  pivotkit::MultiGraph out;
  out.n = g.n;
  for (const auto& e : g.edges) {
    if (in(con, e.label) || in(del, e.label)) continue;
    out.edges.push_back({e.label, find(e.u), find(e.v)});
  }
  return out;
}

// ------------------------------------------------------------------ matroids

/// Columns of [I | D] keyed by element label.
inline std::map<int, std::vector<int>> columns(const pivotkit::BinaryMatroid& m) {
  std::map<int, std::vector<int>> cols;
  const std::size_t r = m.rank();
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    cols[m.basis()[i]] = c;
  }
  for (std::size_t j = 0; j < m.cobasis().size(); ++j) {
    std::vector<int> c(r, 0);
    for (std::size_t i = 0; i < r; ++i) c[i] = m.rep().get(i, j) ? 1 : 0;
    cols[m.cobasis()[j]] = c;
  }
  return cols;
}

inline std::size_t set_rank(const std::map<int, std::vector<int>>& cols, const std::vector<int>& set) {
  Rows rows;
  for (const int e : set) rows.push_back(cols.at(e));  // rank of the transpose
  if (rows.empty() || rows[0].empty()) return 0;
  return rank(rows);
}

/// Circuits as minimal dependent column sets, by enumerating subsets.
inline std::set<std::vector<int>> circuits(const pivotkit::BinaryMatroid& m) {
  const auto cols = columns(m);
  std::vector<int> ground;
  for (const auto& [e, c] : cols) ground.push_back(e);
  std::set<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ground.size()); ++mask) {
    std::vector<int> set;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((mask >> i) & 1U) set.push_back(ground[i]);
    }
    if (set_rank(cols, set) != set.size() - 1) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < set.size() && minimal; ++i) {
      std::vector<int> smaller = set;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (set_rank(cols, smaller) != smaller.size()) minimal = false;
    }
    if (minimal) out.insert(set);
  }
  return out;
}

/// Matroid connectivity r(X) + r(E - X) - r(E).
inline std::size_t lambda(const pivotkit::BinaryMatroid& m, const std::vector<int>& x) {
  const auto cols = columns(m);
  std::vector<int> rest;
  std::vector<int> all;
  for (const auto& [e, c] : cols) {
    all.push_back(e);
    if (std::find(x.begin(), x.end(), e) == x.end()) rest.push_back(e);
  }
  return set_rank(cols, x) + set_rank(cols, rest) - set_rank(cols, all);
}

// ------------------------------------------------------------------ tree splits

using EdgeList = pivotkit::EdgeList;

inline std::set<std::size_t> vertices_of(const EdgeList& edges) {
  std::set<std::size_t> out;
  for (const auto& [u, v] : edges) {
    out.insert(u);
    out.insert(v);
  }
  return out;
}

inline bool connected_edges(const EdgeList& edges) {
  if (edges.empty()) return true;
  std::map<std::size_t, std::size_t> parent;
  for (const auto v : vertices_of(edges)) parent[v] = v;
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  const std::size_t root = find(edges[0].first);
  return std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return find(e.first) == root; });
}

inline EdgeList normalized(EdgeList edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Validity of a split: subtrees (connected edge sets of the tree) with at
/// least s edges, pairwise edge-disjoint, meeting only where required.
inline bool valid_split(const pivotkit::Graph& tree, std::size_t s, const pivotkit::TreeSplit& split) {
  const EdgeList all = normalized(tree.edges());
  const auto subset_of_tree = [&](const EdgeList& part) {
    const EdgeList n = normalized(part);
    return std::adjacent_find(n.begin(), n.end()) == n.end() &&
           std::includes(all.begin(), all.end(), n.begin(), n.end());
  };
  const auto disjoint = [](EdgeList a, EdgeList b) {
    a = normalized(a);
    b = normalized(b);
    EdgeList common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
  };
  if (const auto* cut = std::get_if<pivotkit::SplitEdge>(&split)) {
    const pivotkit::Edge e = cut->edge.first < cut->edge.second ? cut->edge
                                                                : pivotkit::Edge{cut->edge.second, cut->edge.first};
    if (!std::binary_search(all.begin(), all.end(), e)) return false;
    EdgeList rest = cut->side_a;
    rest.insert(rest.end(), cut->side_b.begin(), cut->side_b.end());
    rest.push_back(e);
    if (normalized(rest) != all) return false;
    return cut->side_a.size() >= s && cut->side_b.size() >= s && connected_edges(cut->side_a) &&
           connected_edges(cut->side_b) && disjoint(cut->side_a, cut->side_b);
  }
  const auto& star = std::get<pivotkit::SplitVertex>(split);
  const std::vector<const EdgeList*> parts{&star.t1, &star.t2, &star.t3};
  for (const auto* p : parts) {
    if (p->size() < s || !subset_of_tree(*p) || !connected_edges(*p)) return false;
    if (!vertices_of(*p).count(star.center)) return false;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!disjoint(*parts[i], *parts[j])) return false;
      const auto vi = vertices_of(*parts[i]);
      const auto vj = vertices_of(*parts[j]);
      std::vector<std::size_t> common;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(common));
      if (common != std::vector<std::size_t>{star.center}) return false;
    }
  }
  return true;
}

}  // namespace oracle
