#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pivotkit/gf2.hpp"
#include "pivotkit/graph.hpp"

namespace pivotkit {

/// Edges are stored as (u, v) with u < v and kept sorted.
using EdgeList = std::vector<Edge>;

/// An edge whose removal leaves two subtrees with at least s edges each.
struct SplitEdge {
  Edge edge;
  EdgeList side_a;  // component containing edge.first
  EdgeList side_b;  // component containing edge.second

  bool operator==(const SplitEdge&) const = default;
};

/// Three edge-disjoint subtrees with at least s edges each, pairwise meeting
/// exactly in `center`.
struct SplitVertex {
  Vertex center = 0;
  EdgeList t1;
  EdgeList t2;
  EdgeList t3;

  bool operator==(const SplitVertex&) const = default;
};

using TreeSplit = std::variant<SplitEdge, SplitVertex>;

/// Splits a tree with at least 5s edges. Roots at vertex 0 and takes the
/// deepest (then least) vertex v whose subtree has >= s edges; if that subtree
/// has >= 3s edges the child branches of v are grouped greedily in ascending
/// child order into T1 and T2 and the rest of the tree is T3, otherwise the
/// edge from v to its parent is returned. Throws NotATree / TreeTooSmall.
TreeSplit split_tree(const Graph& tree, std::size_t s);

/// Empty string when `split` satisfies the split invariants for tree and s,
/// otherwise a description of the first failed condition.
std::string check_tree_split(const Graph& tree, std::size_t s, const TreeSplit& split);

enum class BlockTag { Zero, One, Equal, Complement };

std::string_view to_string(BlockTag tag);

/// Row and column partitions with a constant tag per block.
struct BlockPartition {
  std::vector<std::vector<std::size_t>> row_classes;
  std::vector<std::vector<std::size_t>> col_classes;
  /// tags[i][j] describes the block row_classes[i] x col_classes[j].
  std::vector<std::vector<BlockTag>> tags;

  bool operator==(const BlockPartition&) const = default;
};

/// Groups identical rows and identical columns (classes in order of first
/// occurrence); every block is then all-zero (Zero) or all-one (One).
BlockPartition constant_block_partition(const BitMatrix& c);

/// constant_block_partition of D1 ^ D2, with Zero read as Equal and One as
/// Complement. Throws DimensionMismatch when the sides differ.
BlockPartition perturbation_partition(const BiGraph& g1, const BiGraph& g2);

/// Rebuilds G1 from G2 and a partition produced by perturbation_partition.
BiGraph apply_perturbation(const BiGraph& g2, const BlockPartition& partition);

/// Average degree of g is at most 10 n^2 s with n the larger class count.
/// Throws PartitionInvalid if the classes do not partition the sides.
bool check_struct_density(const BiGraph& g, const std::vector<std::vector<std::size_t>>& row_classes,
                          const std::vector<std::vector<std::size_t>>& col_classes, std::size_t s);

}  // namespace pivotkit
