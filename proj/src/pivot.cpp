#include "pivotkit/pivot.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "pivotkit/error.hpp"

namespace pivotkit {

Graph pivot(const Graph& g, Vertex x, Vertex y) {
  const std::size_t n = g.vertex_count();
  if (x >= n || y >= n || x == y || !g.has_edge(x, y)) {
    throw Error(ErrorCode::NotAnEdge,
                "cannot pivot on " + std::to_string(x) + "-" + std::to_string(y));
  }
  const BitVector nx = g.neighbor_mask(x);
  const BitVector ny = g.neighbor_mask(y);
  BitVector v1 = nx & ~ny;
  v1.reset(y);
  BitVector v2 = ny & ~nx;
  v2.reset(x);
  const BitVector v3 = nx & ny;

  Graph out = g;
  // Rows are toggled one region at a time; toggle_row keeps the matrix symmetric.
  for (Vertex u : v1.ones()) out.toggle_row(u, v2);
  for (Vertex u : v2.ones()) out.toggle_row(u, v3);
  for (Vertex u : v3.ones()) out.toggle_row(u, v1);
  return out.with_swapped(x, y);
}

std::vector<Graph> pivot_orbit(const Graph& g, std::size_t max_size) {
  std::vector<Graph> orbit{g};
  std::set<Graph> seen{g};
  if (max_size < 1) throw Error(ErrorCode::OrbitBudgetExceeded, "orbit exceeds 0 graphs");
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Graph current = orbit[head];
    for (const auto& [x, y] : current.edges()) {
      Graph next = pivot(current, x, y);
      if (seen.insert(next).second) {
        if (orbit.size() >= max_size) {
          throw Error(ErrorCode::OrbitBudgetExceeded,
                      "orbit exceeds " + std::to_string(max_size) + " graphs");
        }
        orbit.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

namespace {

// Colour refinement with canonical colour names: colours are ranks of
// (colour, sorted neighbour colours) signatures, so isomorphic graphs get
// identical colour classes.
std::vector<std::size_t> refined_colours(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t classes = 0;
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<std::size_t> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<std::size_t>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g)
      : g_(g), n_(g.vertex_count()), colour_(refined_colours(g)), used_(n_, false),
        perm_(n_), cur_(n_ + 1, 0), best_(n_ + 1, 0) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    for (Vertex v = 0; v < n_; ++v) adj_words_.push_back(mask_of(v));
  }

  std::uint64_t run() {
    search(0);
    return best_[n_];
  }

 private:
  std::uint64_t mask_of(Vertex v) const {
    std::uint64_t m = 0;
    for (Vertex w : g_.neighbors(v)) m |= std::uint64_t{1} << w;
    return m;
  }

  // Bits contributed by placing v at position p: adjacency to positions 0..p-1,
  // position 0 most significant.
  std::uint64_t chunk(Vertex v, std::size_t p) const {
    std::uint64_t bits = 0;
    for (std::size_t q = 0; q < p; ++q) {
      bits = (bits << 1) | ((adj_words_[v] >> perm_[q]) & 1U);
    }
    return bits;
  }

  void search(std::size_t p) {
    if (p == n_) {
      if (!have_best_ || cur_[n_] < best_[n_]) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> candidates;
    std::uint64_t least = ~std::uint64_t{0};
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[p]) continue;
      const std::uint64_t c = chunk(v, p);
      if (c < least) {
        least = c;
        candidates.clear();
      }
      if (c == least) candidates.push_back(v);
    }
    const std::uint64_t next = (cur_[p] << p) | least;
    if (have_best_ && next > best_[p + 1]) return;

    std::vector<Vertex> tried;
    for (Vertex v : candidates) {
      // Twins (same neighbourhood apart from each other) are exchanged by an
      // automorphism fixing every placed vertex.
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        const std::uint64_t mu = adj_words_[u] & ~(std::uint64_t{1} << v);
        const std::uint64_t mv = adj_words_[v] & ~(std::uint64_t{1} << u);
        return mu == mv;
      });
      if (twin) continue;
      tried.push_back(v);
      used_[v] = true;
      perm_[p] = v;
      cur_[p + 1] = next;
      search(p + 1);
      used_[v] = false;
      if (have_best_ && cur_[p + 1] > best_[p + 1]) break;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> slot_colour_;
  std::vector<std::uint64_t> adj_words_;
  std::vector<bool> used_;
  std::vector<Vertex> perm_;
  std::vector<std::uint64_t> cur_;
  std::vector<std::uint64_t> best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices) {
    throw Error(ErrorCode::CapExceeded, "canonical form supports at most " +
                                            std::to_string(kCanonicalMaxVertices) + " vertices");
  }
  return {g.vertex_count(), Canonicalizer(g).run()};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da;
  std::vector<std::size_t> db;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

struct MinorState {
  Graph graph;
  std::vector<Vertex> names;
  std::size_t parent;
  MinorStep step;
};

std::vector<MinorStep> trace_back(const std::vector<MinorState>& states, std::size_t index) {
  std::vector<MinorStep> steps;
  while (index != 0) {
    steps.push_back(states[index].step);
    index = states[index].parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

PivotMinorResult is_pivot_minor(const Graph& h, const Graph& g, std::size_t budget) {
  const std::size_t target_n = h.vertex_count();
  if (target_n > g.vertex_count()) return {false, {}, 0};
  const CanonicalForm target = canonical_form(h);

  std::vector<MinorState> states;
  std::vector<Vertex> names(g.vertex_count());
  for (Vertex v = 0; v < names.size(); ++v) names[v] = v;
  states.push_back({g, names, 0, {}});
  std::set<CanonicalForm> seen{canonical_form(g)};
  if (*seen.begin() == target) return {true, {}, 1};

  for (std::size_t head = 0; head < states.size(); ++head) {
    auto visit = [&](Graph next, std::vector<Vertex> next_names, MinorStep step) -> bool {
      const CanonicalForm key = canonical_form(next);
      if (!seen.insert(key).second) return false;
      if (seen.size() > budget) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "pivot-minor search exceeded " + std::to_string(budget) + " states");
      }
      states.push_back({std::move(next), std::move(next_names), head, step});
      return key == target;
    };
    // Copies: `states` may reallocate while visiting.
    const Graph current = states[head].graph;
    const std::vector<Vertex> current_names = states[head].names;
    for (const auto& [x, y] : current.edges()) {
      MinorStep step{MinorStep::Kind::Pivot, current_names[x], current_names[y]};
      if (visit(pivot(current, x, y), current_names, step)) {
        return {true, trace_back(states, states.size() - 1), seen.size()};
      }
    }
    if (current.vertex_count() > target_n) {
      for (Vertex v = 0; v < current.vertex_count(); ++v) {
        std::vector<Vertex> rest = current_names;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(v));
        MinorStep step{MinorStep::Kind::Delete, current_names[v], 0};
        if (visit(current.without_vertex(v), std::move(rest), step)) {
          return {true, trace_back(states, states.size() - 1), seen.size()};
        }
      }
    }
  }
  return {false, {}, seen.size()};
}

Graph apply_minor_steps(const Graph& g, const std::vector<MinorStep>& steps) {
  Graph current = g;
  std::vector<Vertex> names(g.vertex_count());
  for (Vertex v = 0; v < names.size(); ++v) names[v] = v;
  auto position = [&](Vertex name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(name) + " not present");
    }
    return static_cast<Vertex>(it - names.begin());
  };
  for (const MinorStep& step : steps) {
    if (step.kind == MinorStep::Kind::Pivot) {
      current = pivot(current, position(step.a), position(step.b));
    } else {
      const Vertex p = position(step.a);
      current = current.without_vertex(p);
      names.erase(names.begin() + static_cast<std::ptrdiff_t>(p));
    }
  }
  return current;
}

std::string to_string(const MinorStep& step) {
  std::ostringstream out;
  if (step.kind == MinorStep::Kind::Pivot) {
    out << "pivot " << step.a << " " << step.b;
  } else {
    out << "delete " << step.a;
  }
  return out.str();
}

}  // namespace pivotkit
