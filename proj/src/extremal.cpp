#include "pivotkit/extremal.hpp"

#include <algorithm>
#include <limits>

#include "pivotkit/error.hpp"

namespace pivotkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Instance make_instance(MultiGraph g, SpanningTree tree, std::string provenance) {
  BiGraph fundamental(fundamental_matrix(g, tree));
  return Instance{std::move(g), std::move(tree), std::move(fundamental), std::move(provenance)};
}

Instance gen_ktt_example(std::size_t t) {
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "ktt example needs t >= 2");
  const std::size_t k = t - 1;
  MultiGraph g{k + 1, {}};
  SpanningTree tree;
  Element label = 0;
  for (std::size_t v = 0; v < k; ++v) {
    g.edges.push_back({label, v, v + 1});
    tree.edges.push_back(label++);
  }
  for (std::size_t i = 0; i < k; ++i) g.edges.push_back({label++, 0, k});
  return make_instance(std::move(g), std::move(tree), "ktt t=" + std::to_string(t) + " seed=0");
}

Instance gen_c6_blowup_example(std::size_t s) {
  if (s < 2) throw Error(ErrorCode::InvalidArgument, "c6 blow-up example needs s >= 2");
  const std::size_t leg = s - 1;
  // Vertex 0 is the center; leg i occupies vertices 1 + i*leg .. (i+1)*leg.
  MultiGraph g{1 + 3 * leg, {}};
  SpanningTree tree;
  Element label = 0;
  std::size_t tips[3];
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t previous = 0;
    for (std::size_t j = 0; j < leg; ++j) {
      const std::size_t v = 1 + i * leg + j;
      g.edges.push_back({label, previous, v});
      tree.edges.push_back(label++);
      previous = v;
    }
    tips[i] = previous;
  }
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    for (std::size_t j = 0; j < leg; ++j) g.edges.push_back({label++, tips[a], tips[b]});
  }
  return make_instance(std::move(g), std::move(tree), "c6blowup s=" + std::to_string(s) + " seed=0");
}

std::vector<Edge> pruefer_tree(std::size_t n, const std::vector<std::size_t>& sequence) {
  if (n < 2 || sequence.size() + 2 != n) {
    throw Error(ErrorCode::InvalidArgument, "Pruefer sequence must have n-2 entries");
  }
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : sequence) {
    if (x >= n) throw Error(ErrorCode::InvalidArgument, "Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (std::size_t x : sequence) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return edges;
}

Instance gen_random_instance(std::size_t n, std::size_t extra, std::uint64_t seed,
                             bool allow_loops) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "random instance needs n >= 2");
  Rng rng(seed);
  std::vector<std::size_t> sequence(n - 2);
  for (auto& x : sequence) x = rng.below(n);
  MultiGraph g{n, {}};
  SpanningTree tree;
  Element label = 0;
  for (const auto& [u, v] : pruefer_tree(n, sequence)) {
    g.edges.push_back({label, u, v});
    tree.edges.push_back(label++);
  }
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t u = rng.below(n);
    std::size_t v = rng.below(n);
    while (!allow_loops && u == v) {
      u = rng.below(n);
      v = rng.below(n);
    }
    g.edges.push_back({label++, u, v});
  }
  std::string provenance = "random n=" + std::to_string(n) + " extra=" + std::to_string(extra) +
                           (allow_loops ? " loops=1" : "") + " seed=" + std::to_string(seed);
  return make_instance(std::move(g), std::move(tree), std::move(provenance));
}

}  // namespace pivotkit
