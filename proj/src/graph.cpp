#include "pivotkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "pivotkit/error.hpp"

namespace pivotkit {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

__extension__ using Wide = __int128;

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const Wide lhs = static_cast<Wide>(num_) * other.den_;
  const Wide rhs = static_cast<Wide>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n, n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  }
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loops are not allowed");
  adj_.set(u, v);
  adj_.set(v, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_.set(u, v, false);
  adj_.set(v, u, false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  adj_.flip(u, v);
  adj_.flip(v, u);
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Word w : adj_.row_words(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

VertexSet Graph::neighbors(Vertex v) const { return adj_.row(v).ones(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph Graph::without_vertex(Vertex v) const {
  VertexSet keep;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph Graph::with_swapped(Vertex u, Vertex v) const {
  Graph out = *this;
  out.adj_.swap_rows(u, v);
  out.adj_.swap_cols(u, v);
  return out;
}

void Graph::toggle_row(Vertex v, const BitVector& mask) {
  adj_.xor_row(v, mask);
  for (std::size_t u : mask.ones()) adj_.flip(u, v);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  const std::size_t n = vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Graph BiGraph::to_graph() const {
  Graph g(size_a() + size_b());
  for (std::size_t i = 0; i < size_a(); ++i) {
    for (std::size_t j : bi_.row(i).ones()) g.add_edge(i, size_a() + j);
  }
  return g;
}

BiGraph bipartite_complement(const BiGraph& g) { return BiGraph(g.biadjacency().complement()); }

namespace {

// Chooses s rows of `m` (ascending) whose common neighbourhood has >= t columns.
bool search_rows(const BitMatrix& m, const std::vector<std::size_t>& candidates, std::size_t start,
                 std::size_t s, std::size_t t, const BitVector& common,
                 std::vector<std::size_t>& chosen) {
  if (chosen.size() == s) return common.count() >= t;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (candidates.size() - i < s - chosen.size()) break;
    BitVector next = common & m.row(candidates[i]);
    if (next.count() < t) continue;
    chosen.push_back(candidates[i]);
    if (search_rows(m, candidates, i + 1, s, t, next, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> search_side(
    const BitMatrix& m, std::size_t s, std::size_t t) {
  if (s > m.nrows() || t > m.ncols()) return std::nullopt;
  std::vector<std::size_t> candidates;
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    if (m.row(r).count() >= t) candidates.push_back(r);
  }
  std::vector<std::size_t> chosen;
  BitVector all = ~BitVector(m.ncols());
  if (!search_rows(m, candidates, 0, s, t, all, chosen)) return std::nullopt;
  BitVector common = all;
  for (std::size_t r : chosen) common &= m.row(r);
  auto t_side = common.ones();
  t_side.resize(t);
  return std::make_pair(chosen, t_side);
}

}  // namespace

std::optional<CompleteBipartiteWitness> find_complete_bipartite(const BiGraph& g, std::size_t s,
                                                                std::size_t t) {
  if (auto hit = search_side(g.biadjacency(), s, t)) {
    return CompleteBipartiteWitness{Side::A, std::move(hit->first), std::move(hit->second)};
  }
  if (auto hit = search_side(g.biadjacency().transpose(), s, t)) {
    return CompleteBipartiteWitness{Side::B, std::move(hit->first), std::move(hit->second)};
  }
  return std::nullopt;
}

bool is_c4_free(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const BitVector nu = g.neighbor_mask(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if ((nu & g.neighbor_mask(v)).count() >= 2) return false;
    }
  }
  return true;
}

Graph blow_up(const Graph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "blow-up factor must be >= 1");
  Graph out(g.vertex_count() * k);
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) out.add_edge(u * k + a, v * k + b);
    }
  }
  return out;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
// Unit-capacity max flow on the split graph: v_in = 2v, v_out = 2v + 1.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> cap(nodes * nodes, 0);
  auto at = [&](std::size_t a, std::size_t b) -> int& { return cap[a * nodes + b]; };
  for (Vertex v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
  for (const auto& [u, v] : g.edges()) {
    at(2 * u + 1, 2 * v) = kInf;
    at(2 * v + 1, 2 * u) = kInf;
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  std::vector<std::size_t> parent(nodes);
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), nodes);
    parent[source] = source;
    std::deque<std::size_t> queue{source};
    while (!queue.empty() && parent[sink] == nodes) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < nodes; ++b) {
        if (parent[b] == nodes && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] == nodes) break;
    for (std::size_t b = sink; b != source; b = parent[b]) {
      at(parent[b], b) -= 1;
      at(b, parent[b]) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  std::size_t best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

DegreeStats degree_stats(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  DegreeStats stats{std::numeric_limits<std::size_t>::max(), 0, {}};
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
  }
  stats.average_degree = Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                                  static_cast<std::int64_t>(n));
  return stats;
}

DegreeStats degree_stats(const BiGraph& g) {
  const std::size_t n = g.size_a() + g.size_b();
  if (n == 0) return {};
  const BitMatrix& m = g.biadjacency();
  DegreeStats stats{std::numeric_limits<std::size_t>::max(), 0, {}};
  auto visit = [&](std::size_t d) {
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
  };
  for (std::size_t i = 0; i < m.nrows(); ++i) visit(m.row(i).count());
  const BitMatrix mt = m.transpose();
  for (std::size_t j = 0; j < mt.nrows(); ++j) visit(mt.row(j).count());
  stats.average_degree = Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                                  static_cast<std::int64_t>(n));
  return stats;
}

}  // namespace pivotkit
