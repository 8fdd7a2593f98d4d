#include "pivotkit/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "pivotkit/error.hpp"

namespace pivotkit {

namespace {

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<std::size_t> depth;
  std::vector<std::vector<Vertex>> children;
  std::vector<std::size_t> subtree_edges;
};

RootedTree root_at_zero(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  RootedTree rt{std::vector<Vertex>(n, n), std::vector<std::size_t>(n, 0),
                std::vector<std::vector<Vertex>>(n), std::vector<std::size_t>(n, 0)};
  std::vector<Vertex> order{0};
  rt.parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : tree.neighbors(u)) {
      if (rt.parent[w] != n) continue;
      rt.parent[w] = u;
      rt.depth[w] = rt.depth[u] + 1;
      rt.children[u].push_back(w);
      order.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex c : rt.children[*it]) rt.subtree_edges[*it] += rt.subtree_edges[c] + 1;
  }
  return rt;
}

void collect_subtree(const RootedTree& rt, Vertex v, EdgeList& out) {
  for (Vertex c : rt.children[v]) {
    out.push_back(ordered(v, c));
    collect_subtree(rt, c, out);
  }
}

EdgeList sorted(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

EdgeList minus(const EdgeList& all, const EdgeList& a, const EdgeList& b) {
  std::set<Edge> removed(a.begin(), a.end());
  removed.insert(b.begin(), b.end());
  EdgeList out;
  for (const Edge& e : all) {
    if (!removed.count(e)) out.push_back(e);
  }
  return out;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && g.is_connected();
}

}  // namespace

TreeSplit split_tree(const Graph& tree, std::size_t s) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "input is not a tree");
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
  if (tree.edge_count() < 5 * s) {
    throw Error(ErrorCode::TreeTooSmall, "tree has " + std::to_string(tree.edge_count()) +
                                             " edges, needs at least " + std::to_string(5 * s));
  }
  const RootedTree rt = root_at_zero(tree);
  Vertex v = 0;
  for (Vertex u = 0; u < tree.vertex_count(); ++u) {
    if (rt.subtree_edges[u] >= s && rt.depth[u] > rt.depth[v]) v = u;
  }

  TreeSplit result;
  if (rt.subtree_edges[v] >= 3 * s) {
    EdgeList t1;
    EdgeList t2;
    for (Vertex c : rt.children[v]) {  // children are visited in ascending order
      EdgeList& target = t1.size() < s ? t1 : t2;
      if (&target == &t2 && t2.size() >= s) break;
      target.push_back(ordered(v, c));
      collect_subtree(rt, c, target);
    }
    EdgeList t3 = minus(tree.edges(), t1, t2);
    result = SplitVertex{v, sorted(std::move(t1)), sorted(std::move(t2)), std::move(t3)};
  } else {
    const Vertex p = rt.parent[v];
    EdgeList below;
    collect_subtree(rt, v, below);
    const Edge e = ordered(p, v);
    EdgeList above = minus(tree.edges(), below, {e});
    below = sorted(std::move(below));
    if (e.first == v) {
      result = SplitEdge{e, std::move(below), std::move(above)};
    } else {
      result = SplitEdge{e, std::move(above), std::move(below)};
    }
  }
  if (std::string problem = check_tree_split(tree, s, result); !problem.empty()) {
    throw Error(ErrorCode::InvalidArgument, "internal split check failed: " + problem);
  }
  return result;
}

namespace {

std::set<Vertex> vertices_of(const EdgeList& edges) {
  std::set<Vertex> out;
  for (const auto& [a, b] : edges) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

bool connected_edge_set(const EdgeList& edges) {
  if (edges.empty()) return true;
  std::map<Vertex, Vertex> parent;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (Vertex x : vertices_of(edges)) parent[x] = x;
  std::size_t components = parent.size();
  for (const auto& [a, b] : edges) {
    const Vertex ra = find(a);
    const Vertex rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::string check_subtree(const Graph& tree, const EdgeList& part, std::size_t s,
                          const std::string& name) {
  for (const auto& [a, b] : part) {
    if (a >= tree.vertex_count() || b >= tree.vertex_count() || !tree.has_edge(a, b)) {
      return name + " uses a non-tree edge";
    }
  }
  if (std::set<Edge>(part.begin(), part.end()).size() != part.size()) {
    return name + " repeats an edge";
  }
  if (part.size() < s) return name + " has fewer than s edges";
  if (!connected_edge_set(part)) return name + " is not connected";
  return {};
}

bool edge_disjoint(const EdgeList& a, const EdgeList& b) {
  const std::set<Edge> sa(a.begin(), a.end());
  return std::none_of(b.begin(), b.end(), [&](const Edge& e) { return sa.count(e) > 0; });
}

std::set<Vertex> intersect(const std::set<Vertex>& a, const std::set<Vertex>& b) {
  std::set<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

}  // namespace

std::string check_tree_split(const Graph& tree, std::size_t s, const TreeSplit& split) {
  if (!is_tree(tree)) return "input is not a tree";
  if (const auto* cut = std::get_if<SplitEdge>(&split)) {
    const auto [a, b] = cut->edge;
    if (a >= tree.vertex_count() || b >= tree.vertex_count() || !tree.has_edge(a, b)) {
      return "split edge is not a tree edge";
    }
    for (const auto& [part, name] : {std::pair{&cut->side_a, "side A"}, {&cut->side_b, "side B"}}) {
      if (std::string p = check_subtree(tree, *part, s, name); !p.empty()) return p;
    }
    const auto va = vertices_of(cut->side_a);
    const auto vb = vertices_of(cut->side_b);
    if (!va.count(a) || !vb.count(b)) return "sides do not contain the split edge's endpoints";
    if (!intersect(va, vb).empty()) return "sides share a vertex";
    if (cut->side_a.size() + cut->side_b.size() + 1 != tree.edge_count()) {
      return "sides do not cover T - e";
    }
    return {};
  }
  const auto& star = std::get<SplitVertex>(split);
  const std::array<std::pair<const EdgeList*, const char*>, 3> parts{
      {{&star.t1, "T1"}, {&star.t2, "T2"}, {&star.t3, "T3"}}};
  std::array<std::set<Vertex>, 3> verts;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::string p = check_subtree(tree, *parts[i].first, s, parts[i].second); !p.empty()) {
      return p;
    }
    verts[i] = vertices_of(*parts[i].first);
    if (!verts[i].count(star.center)) return std::string(parts[i].second) + " misses the center";
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!edge_disjoint(*parts[i].first, *parts[j].first)) return "subtrees share an edge";
      if (intersect(verts[i], verts[j]) != std::set<Vertex>{star.center}) {
        return "subtrees meet outside the center";
      }
    }
  }
  return {};
}

std::string_view to_string(BlockTag tag) {
  switch (tag) {
    case BlockTag::Zero: return "zero";
    case BlockTag::One: return "one";
    case BlockTag::Equal: return "equal";
    case BlockTag::Complement: return "complement";
  }
  return "?";
}

namespace {

std::vector<std::vector<std::size_t>> identical_rows(const BitMatrix& m) {
  std::map<BitVector, std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    auto [it, fresh] = class_of.emplace(m.row(r), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(r);
  }
  return classes;
}

}  // namespace

BlockPartition constant_block_partition(const BitMatrix& c) {
  BlockPartition out{identical_rows(c), identical_rows(c.transpose()), {}};
  for (const auto& rows : out.row_classes) {
    auto& tag_row = out.tags.emplace_back();
    for (const auto& cols : out.col_classes) {
      tag_row.push_back(c.get(rows.front(), cols.front()) ? BlockTag::One : BlockTag::Zero);
    }
  }
  return out;
}

BlockPartition perturbation_partition(const BiGraph& g1, const BiGraph& g2) {
  if (g1.size_a() != g2.size_a() || g1.size_b() != g2.size_b()) {
    throw Error(ErrorCode::DimensionMismatch, "bipartite graphs have different sides");
  }
  BlockPartition out = constant_block_partition(g1.biadjacency() ^ g2.biadjacency());
  for (auto& row : out.tags) {
    for (BlockTag& tag : row) tag = tag == BlockTag::One ? BlockTag::Complement : BlockTag::Equal;
  }
  return out;
}

BiGraph apply_perturbation(const BiGraph& g2, const BlockPartition& partition) {
  BitMatrix m = g2.biadjacency();
  for (std::size_t i = 0; i < partition.row_classes.size(); ++i) {
    for (std::size_t j = 0; j < partition.col_classes.size(); ++j) {
      if (partition.tags[i][j] != BlockTag::Complement) continue;
      for (std::size_t r : partition.row_classes[i]) {
        for (std::size_t c : partition.col_classes[j]) m.flip(r, c);
      }
    }
  }
  return BiGraph(std::move(m));
}

namespace {

void validate_partition(const std::vector<std::vector<std::size_t>>& classes, std::size_t size,
                        const char* side) {
  std::vector<bool> seen(size, false);
  std::size_t covered = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error(ErrorCode::PartitionInvalid, std::string(side) + " has an empty class");
    for (std::size_t i : cls) {
      if (i >= size || seen[i]) {
        throw Error(ErrorCode::PartitionInvalid,
                    std::string(side) + " index " + std::to_string(i) + " out of range or repeated");
      }
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != size) throw Error(ErrorCode::PartitionInvalid, std::string(side) + " not covered");
}

}  // namespace

bool check_struct_density(const BiGraph& g, const std::vector<std::vector<std::size_t>>& row_classes,
                          const std::vector<std::vector<std::size_t>>& col_classes, std::size_t s) {
  validate_partition(row_classes, g.size_a(), "row partition");
  validate_partition(col_classes, g.size_b(), "column partition");
  const auto n = static_cast<std::int64_t>(std::max(row_classes.size(), col_classes.size()));
  const Rational bound(10 * n * n * static_cast<std::int64_t>(s));
  return degree_stats(g).average_degree <= bound;
}

}  // namespace pivotkit
