#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "pivotkit/graph.hpp"
#include "pivotkit/matroid.hpp"

namespace pivotkit {

/// Reproducible pseudorandom source: std::mt19937_64 (whose output sequence is
/// fixed by the C++ standard) with bounded draws by rejection sampling, so the
/// same seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a run with base seed `seed` (SplitMix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// A connected multigraph with a spanning tree and its fundamental graph.
struct Instance {
  MultiGraph multigraph;
  SpanningTree tree;
  BiGraph fundamental;
  /// "<name> <params> seed=<seed>"
  std::string provenance;
};

/// Builds an Instance from a multigraph and tree, computing the fundamental graph.
Instance make_instance(MultiGraph g, SpanningTree tree, std::string provenance);

/// Path of t-1 tree edges plus t-1 parallel non-tree edges between its ends.
/// Planar; the fundamental graph is K_{t-1,t-1}.
Instance gen_ktt_example(std::size_t t);

/// Spider with three legs of s-1 tree edges and s-1 parallel non-tree edges
/// between each pair of leg tips. Planar; the fundamental graph is the
/// (s-1)-blow-up of C6.
Instance gen_c6_blowup_example(std::size_t s);

/// Uniform labelled tree on n vertices (decoded from a uniform Pruefer
/// sequence) plus `extra` non-tree edges with uniform endpoints. Tree edges are
/// labelled 0..n-2 in decoding order, non-tree edges n-1.. in sampling order.
Instance gen_random_instance(std::size_t n, std::size_t extra, std::uint64_t seed,
                             bool allow_loops = false);

/// Tree on n vertices decoded from a Pruefer sequence (entries in [0, n)).
std::vector<Edge> pruefer_tree(std::size_t n, const std::vector<std::size_t>& sequence);

}  // namespace pivotkit
