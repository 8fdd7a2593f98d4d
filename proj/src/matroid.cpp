#include "pivotkit/matroid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "pivotkit/cutrank.hpp"
#include "pivotkit/detail/subsets.hpp"
#include "pivotkit/error.hpp"

namespace pivotkit {

const MultiEdge* MultiGraph::find(Element label) const {
  for (const MultiEdge& e : edges) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

bool SpanningTree::contains(Element label) const {
  return std::find(edges.begin(), edges.end(), label) != edges.end();
}

BinaryMatroid::BinaryMatroid(std::vector<Element> basis, std::vector<Element> cobasis,
                             BitMatrix rep)
    : basis_(std::move(basis)), cobasis_(std::move(cobasis)), rep_(std::move(rep)) {
  if (basis_.size() != rep_.nrows() || cobasis_.size() != rep_.ncols()) {
    throw Error(ErrorCode::DimensionMismatch, "representation shape does not match labels");
  }
  std::set<Element> seen;
  for (Element e : basis_) {
    if (e < 0 || !seen.insert(e).second) {
      throw Error(ErrorCode::InvalidArgument, "element labels must be distinct and >= 0");
    }
  }
  for (Element e : cobasis_) {
    if (e < 0 || !seen.insert(e).second) {
      throw Error(ErrorCode::InvalidArgument, "element labels must be distinct and >= 0");
    }
  }
}

ElementSet BinaryMatroid::ground() const {
  ElementSet out(basis_);
  out.insert(out.end(), cobasis_.begin(), cobasis_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool BinaryMatroid::contains(Element e) const {
  return in_basis(e) || std::find(cobasis_.begin(), cobasis_.end(), e) != cobasis_.end();
}

bool BinaryMatroid::in_basis(Element e) const {
  return std::find(basis_.begin(), basis_.end(), e) != basis_.end();
}

std::size_t BinaryMatroid::row_of(Element e) const {
  auto it = std::find(basis_.begin(), basis_.end(), e);
  if (it == basis_.end()) {
    throw Error(ErrorCode::ElementNotFound, std::to_string(e) + " is not a basis element");
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t BinaryMatroid::col_of(Element e) const {
  auto it = std::find(cobasis_.begin(), cobasis_.end(), e);
  if (it == cobasis_.end()) {
    throw Error(ErrorCode::ElementNotFound, std::to_string(e) + " is not a non-basis element");
  }
  return static_cast<std::size_t>(it - cobasis_.begin());
}

Graph BinaryMatroid::fundamental_graph() const {
  const ElementSet elements = ground();
  auto position = [&](Element e) {
    return static_cast<Vertex>(std::lower_bound(elements.begin(), elements.end(), e) -
                               elements.begin());
  };
  Graph g(elements.size());
  for (std::size_t i = 0; i < rep_.nrows(); ++i) {
    for (std::size_t j : rep_.row(i).ones()) g.add_edge(position(basis_[i]), position(cobasis_[j]));
  }
  return g;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void validate_tree(const MultiGraph& g, const SpanningTree& tree) {
  if (g.n == 0) throw Error(ErrorCode::NotConnected, "graph has no vertices");
  std::set<Element> labels;
  for (const MultiEdge& e : g.edges) {
    if (e.u >= g.n || e.v >= g.n) throw Error(ErrorCode::InvalidArgument, "endpoint out of range");
    if (!labels.insert(e.label).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge label " + std::to_string(e.label));
    }
  }
  DisjointSets all(g.n);
  std::size_t components = g.n;
  for (const MultiEdge& e : g.edges) {
    if (all.unite(e.u, e.v)) --components;
  }
  if (components != 1) throw Error(ErrorCode::NotConnected, "graph is not connected");

  if (tree.edges.size() + 1 != g.n) {
    throw Error(ErrorCode::NotASpanningTree, "tree must have n-1 edges");
  }
  DisjointSets forest(g.n);
  std::set<Element> used;
  for (Element label : tree.edges) {
    const MultiEdge* e = g.find(label);
    if (e == nullptr || !used.insert(label).second) {
      throw Error(ErrorCode::NotASpanningTree, "unknown or repeated tree edge " + std::to_string(label));
    }
    if (!forest.unite(e->u, e->v)) {
      throw Error(ErrorCode::NotASpanningTree, "tree edges contain a cycle");
    }
  }
}

}  // namespace

BitMatrix fundamental_matrix(const MultiGraph& g, const SpanningTree& tree) {
  validate_tree(g, tree);
  std::vector<const MultiEdge*> tree_edges;
  std::vector<const MultiEdge*> other_edges;
  for (const MultiEdge& e : g.edges) (tree.contains(e.label) ? tree_edges : other_edges).push_back(&e);

  // Root at vertex 0; parent_row[v] is the row of the tree edge to v's parent.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> around(g.n);
  for (std::size_t row = 0; row < tree_edges.size(); ++row) {
    around[tree_edges[row]->u].emplace_back(tree_edges[row]->v, row);
    around[tree_edges[row]->v].emplace_back(tree_edges[row]->u, row);
  }
  std::vector<std::size_t> parent(g.n, g.n);
  std::vector<std::size_t> parent_row(g.n, 0);
  std::vector<std::size_t> depth(g.n, 0);
  std::deque<std::size_t> queue{0};
  parent[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, row] : around[u]) {
      if (parent[w] != g.n) continue;
      parent[w] = u;
      parent_row[w] = row;
      depth[w] = depth[u] + 1;
      queue.push_back(w);
    }
  }

  BitMatrix d(tree_edges.size(), other_edges.size());
  for (std::size_t col = 0; col < other_edges.size(); ++col) {
    std::size_t a = other_edges[col]->u;
    std::size_t b = other_edges[col]->v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        d.set(parent_row[a], col);
        a = parent[a];
      } else {
        d.set(parent_row[b], col);
        b = parent[b];
      }
    }
  }
  return d;
}

namespace {

std::pair<std::vector<Element>, std::vector<Element>> split_labels(const MultiGraph& g,
                                                                   const SpanningTree& tree) {
  std::vector<Element> in_tree;
  std::vector<Element> outside;
  for (const MultiEdge& e : g.edges) (tree.contains(e.label) ? in_tree : outside).push_back(e.label);
  return {in_tree, outside};
}

}  // namespace

BinaryMatroid graphic_matroid(const MultiGraph& g, const SpanningTree& tree) {
  BitMatrix d = fundamental_matrix(g, tree);
  auto [in_tree, outside] = split_labels(g, tree);
  return BinaryMatroid(std::move(in_tree), std::move(outside), std::move(d));
}

BinaryMatroid cographic_matroid(const MultiGraph& g, const SpanningTree& tree) {
  BitMatrix d = fundamental_matrix(g, tree);
  auto [in_tree, outside] = split_labels(g, tree);
  return BinaryMatroid(std::move(outside), std::move(in_tree), d.transpose());
}

BinaryMatroid change_basis(const BinaryMatroid& m, Element x, Element y) {
  const std::size_t row = m.row_of(x);
  const std::size_t col = m.col_of(y);
  BitMatrix rep = matrix_pivot(m.rep(), row, col);
  std::vector<Element> basis = m.basis();
  std::vector<Element> cobasis = m.cobasis();
  basis[row] = y;
  cobasis[col] = x;
  return BinaryMatroid(std::move(basis), std::move(cobasis), std::move(rep));
}

std::vector<ElementSet> circuits(const BinaryMatroid& m) {
  if (m.size() > kCircuitMaxElements) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "circuit enumeration supports at most " + std::to_string(kCircuitMaxElements) +
                    " elements");
  }
  const BitMatrix& d = m.rep();
  const std::size_t r = d.nrows();
  const std::size_t c = d.ncols();
  // Column j of D as a word over the r basis rows.
  std::vector<Word> column(c, 0);
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if (d.get(i, j)) column[j] |= Word{1} << i;
    }
  }
  std::vector<ElementSet> out;
  std::vector<Word> vectors;
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << c); ++chosen) {
    Word basis_part = 0;
    for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
      basis_part ^= column[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    // The support is dependent with exactly one dependency iff its columns
    // have rank |support| - 1.
    vectors.clear();
    for (Word rest = basis_part; rest != 0; rest &= rest - 1) {
      vectors.push_back(Word{1} << std::countr_zero(rest));
    }
    for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
      vectors.push_back(column[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    if (rank_of_words(vectors) + 1 != vectors.size()) continue;
    ElementSet circuit;
    for (Word rest = basis_part; rest != 0; rest &= rest - 1) {
      circuit.push_back(m.basis()[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) {
      circuit.push_back(m.cobasis()[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    std::sort(circuit.begin(), circuit.end());
    out.push_back(std::move(circuit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BinaryMatroid drop_row(const BinaryMatroid& m, std::size_t row) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols(m.cobasis().size());
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < m.basis().size(); ++i) {
    if (i == row) continue;
    rows.push_back(i);
    basis.push_back(m.basis()[i]);
  }
  return BinaryMatroid(std::move(basis), m.cobasis(), m.rep().submatrix(rows, cols));
}

BinaryMatroid drop_col(const BinaryMatroid& m, std::size_t col) {
  std::vector<std::size_t> rows(m.basis().size());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols;
  std::vector<Element> cobasis;
  for (std::size_t j = 0; j < m.cobasis().size(); ++j) {
    if (j == col) continue;
    cols.push_back(j);
    cobasis.push_back(m.cobasis()[j]);
  }
  return BinaryMatroid(m.basis(), std::move(cobasis), m.rep().submatrix(rows, cols));
}

ElementSet normalized(const BinaryMatroid& m, ElementSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Element e : set) {
    if (!m.contains(e)) throw Error(ErrorCode::ElementNotFound, "no element " + std::to_string(e));
  }
  return set;
}

}  // namespace

BinaryMatroid minor(const BinaryMatroid& m, const ElementSet& deletions,
                    const ElementSet& contractions) {
  const ElementSet del = normalized(m, deletions);
  const ElementSet con = normalized(m, contractions);
  for (Element e : del) {
    if (std::binary_search(con.begin(), con.end(), e)) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(e) + " both deleted and contracted");
    }
  }
  BinaryMatroid current = m;
  for (Element e : con) {
    if (!current.in_basis(e)) {
      const std::size_t col = current.col_of(e);
      std::optional<Element> partner;
      for (std::size_t i = 0; i < current.rep().nrows(); ++i) {
        if (current.rep().get(i, col) && (!partner || current.basis()[i] < *partner)) {
          partner = current.basis()[i];
        }
      }
      if (!partner) {
        current = drop_col(current, col);  // loop
        continue;
      }
      current = change_basis(current, *partner, e);
    }
    current = drop_row(current, current.row_of(e));
  }
  for (Element e : del) {
    if (current.in_basis(e)) {
      const std::size_t row = current.row_of(e);
      std::optional<Element> partner;
      for (std::size_t j = 0; j < current.rep().ncols(); ++j) {
        if (current.rep().get(row, j) && (!partner || current.cobasis()[j] < *partner)) {
          partner = current.cobasis()[j];
        }
      }
      if (!partner) {
        current = drop_row(current, row);  // coloop
        continue;
      }
      current = change_basis(current, e, *partner);
    }
    current = drop_col(current, current.col_of(e));
  }
  return current;
}

namespace {

struct LambdaTables {
  explicit LambdaTables(const BinaryMatroid& m) : elements(m.ground()) {
    rows.assign(m.rep().nrows(), 0);
    for (std::size_t i = 0; i < m.rep().nrows(); ++i) {
      for (std::size_t j : m.rep().row(i).ones()) rows[i] |= Word{1} << j;
    }
    auto position = [&](Element e) {
      return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), e) -
                                      elements.begin());
    };
    for (Element e : m.basis()) basis_pos.push_back(position(e));
    for (Element e : m.cobasis()) cobasis_pos.push_back(position(e));
  }

  // x_mask is over ground positions.
  std::size_t lambda(std::uint64_t x_mask) const {
    Word xc = 0;
    for (std::size_t j = 0; j < cobasis_pos.size(); ++j) {
      if ((x_mask >> cobasis_pos[j]) & 1U) xc |= Word{1} << j;
    }
    std::vector<Word> inside;
    std::vector<Word> outside;
    for (std::size_t i = 0; i < basis_pos.size(); ++i) {
      if ((x_mask >> basis_pos[i]) & 1U) {
        inside.push_back(rows[i] & ~xc);
      } else {
        outside.push_back(rows[i] & xc);
      }
    }
    return rank_of_words(inside) + rank_of_words(outside);
  }

  ElementSet elements;
  std::vector<Word> rows;
  std::vector<std::size_t> basis_pos;
  std::vector<std::size_t> cobasis_pos;
};

}  // namespace

std::size_t lambda(const BinaryMatroid& m, const ElementSet& x) {
  const ElementSet set = normalized(m, x);
  if (m.rep().ncols() > kWordBits || m.size() > kWordBits) {
    std::vector<std::size_t> xb, yb, xc, yc;
    for (std::size_t i = 0; i < m.basis().size(); ++i) {
      (std::binary_search(set.begin(), set.end(), m.basis()[i]) ? xb : yb).push_back(i);
    }
    for (std::size_t j = 0; j < m.cobasis().size(); ++j) {
      (std::binary_search(set.begin(), set.end(), m.cobasis()[j]) ? xc : yc).push_back(j);
    }
    return rank(m.rep().submatrix(xb, yc)) + rank(m.rep().submatrix(yb, xc));
  }
  const LambdaTables tables(m);
  std::uint64_t mask = 0;
  for (Element e : set) {
    mask |= std::uint64_t{1} << (std::lower_bound(tables.elements.begin(), tables.elements.end(), e) -
                                 tables.elements.begin());
  }
  return tables.lambda(mask);
}

ConnectivityResult is_k_connected(const BinaryMatroid& m, std::size_t k) {
  const std::size_t n = m.size();
  if (n > subset_cap()) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "connectivity search limited to " + std::to_string(subset_cap()) + " elements");
  }
  const LambdaTables tables(m);
  for (std::size_t order = 1; order < k; ++order) {
    std::optional<LambdaWitness> found;
    detail::for_each_separation_side(n, order, [&](std::uint64_t mask) {
      const std::size_t value = tables.lambda(mask);
      if (value >= order) return false;
      ElementSet x;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        x.push_back(tables.elements[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      found = LambdaWitness{std::move(x), order, value};
      return true;
    });
    if (found) return {false, std::move(found)};
  }
  return {true, std::nullopt};
}

}  // namespace pivotkit
