#include <gtest/gtest.h>

#include <cstdlib>

#include "generators.hpp"
#include "oracles.hpp"
#include "pivotkit/cutrank.hpp"
#include "pivotkit/error.hpp"

using pivotkit::Graph;
using pivotkit::VertexSet;

namespace {

VertexSet from_mask(std::uint64_t mask, std::size_t n) {
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(CutRank, Examples) {
  const Graph k33 = pivotkit::BiGraph::complete(3, 3).to_graph();
  EXPECT_EQ(pivotkit::cut_rank(k33, {0, 1, 2}), 1u);
  EXPECT_EQ(pivotkit::cut_rank(Graph::cycle(4), {0, 1}), 2u);
  EXPECT_EQ(pivotkit::cut_rank(Graph::cycle(4), {}), 0u);
  EXPECT_EQ(pivotkit::cut_rank(Graph::cycle(4), {0, 1, 2, 3}), 0u);
  EXPECT_EQ(pivotkit::cut_rank(Graph::cycle(4), {1, 0, 1}), 2u);
}

TEST(CutRank, MatchesDefinitionAndProperties) {
  gen::Source src(101);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = src.uniform(1, 9);
    const Graph g = src.graph(n, 0.2 + 0.15 * (i % 5));
    const auto adj = oracle::adjacency(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const std::size_t r = pivotkit::cut_rank(g, from_mask(mask, n));
      ASSERT_EQ(r, oracle::cut_rank(adj, mask));
      ASSERT_EQ(r, pivotkit::cut_rank(g, from_mask(full & ~mask, n)));
      const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
      ASSERT_LE(r, std::min(size, n - size));
    }
  }
}

TEST(CutRank, LargeGraphsUseGeneralPath) {
  gen::Source src(103);
  const Graph g = src.graph(70, 0.1);
  const auto adj = oracle::adjacency(g);
  for (int i = 0; i < 20; ++i) {
    VertexSet x;
    for (std::size_t v = 0; v < 70; ++v) {
      if (src.chance(0.5)) x.push_back(v);
    }
    // Compare against the oracle through an explicit matrix.
    oracle::Rows rows;
    std::vector<int> in(70, 0);
    for (const auto v : x) in[v] = 1;
    for (std::size_t u = 0; u < 70; ++u) {
      if (!in[u]) continue;
      std::vector<int> row;
      for (std::size_t v = 0; v < 70; ++v) {
        if (!in[v]) row.push_back(adj[u][v]);
      }
      rows.push_back(row);
    }
    const std::size_t expected = rows.empty() || rows[0].empty() ? 0 : oracle::rank(rows);
    ASSERT_EQ(pivotkit::cut_rank(g, x), expected);
  }
}

TEST(CutRank, DeletingAVertexNeverIncreasesCutRank) {
  gen::Source src(107);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = src.uniform(2, 8);
    const Graph g = src.graph(n);
    const std::size_t dead = src.uniform(0, n - 1);
    const Graph h = g.without_vertex(dead);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if ((mask >> dead) & 1U) continue;
      VertexSet in_h;
      for (std::size_t v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) in_h.push_back(v < dead ? v : v - 1);
      }
      ASSERT_LE(pivotkit::cut_rank(h, in_h), pivotkit::cut_rank(g, from_mask(mask, n)));
    }
  }
}

TEST(Separation, Examples) {
  const Graph k33 = pivotkit::BiGraph::complete(3, 3).to_graph();
  const auto sep = pivotkit::find_low_rank_separation(k33, 4);
  ASSERT_TRUE(sep);
  EXPECT_LT(sep->cutrank_value, sep->order);
  EXPECT_GE(sep->side_x.size(), sep->order);
  EXPECT_GE(6 - sep->side_x.size(), sep->order);
  // Every 3|3 split of K_{3,3} has cut-rank at most 2, so an order-3 separation exists.
  const auto three = pivotkit::find_separation_of_rank(k33, 3);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->order, 3u);
  EXPECT_EQ(three->side_x.size(), 3u);
  EXPECT_LE(three->cutrank_value, 2u);

  EXPECT_FALSE(pivotkit::find_low_rank_separation(Graph::cycle(5), 2));
  EXPECT_TRUE(pivotkit::is_k_rank_connected(Graph(7), 1));
  EXPECT_FALSE(pivotkit::is_k_rank_connected(Graph(2), 2));
}

TEST(Separation, MatchesBruteForce) {
  gen::Source src(109);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = src.uniform(1, 8);
    const Graph g = src.graph(n, 0.3 + 0.1 * (i % 5));
    const auto adj = oracle::adjacency(g);
    for (std::size_t k = 1; k <= 5; ++k) {
      bool exists = false;
      for (std::size_t l = 1; l < k && !exists; ++l) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !exists; ++mask) {
          const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
          if (size >= l && n - size >= l && oracle::cut_rank(adj, mask) < l) exists = true;
        }
      }
      const auto sep = pivotkit::find_low_rank_separation(g, k);
      ASSERT_EQ(sep.has_value(), exists) << "trial " << i << " k " << k;
      if (sep) {
        ASSERT_EQ(pivotkit::cut_rank(g, sep->side_x), sep->cutrank_value);
        ASSERT_LT(sep->cutrank_value, sep->order);
        ASSERT_LT(sep->order, k);
      }
    }
  }
}

TEST(Separation, CapIsEnforced) {
  try {
    (void)pivotkit::find_low_rank_separation(Graph(pivotkit::kMaxSubsetN + 1), 3);
    FAIL();
  } catch (const pivotkit::Error& e) {
    EXPECT_EQ(e.code(), pivotkit::ErrorCode::CapExceeded);
  }
}

TEST(Separation, EnvironmentCanOnlyLowerTheCap) {
  ::setenv("PIVOTKIT_MAX_SUBSET_N", "6", 1);
  EXPECT_EQ(pivotkit::subset_cap(), 6u);
  EXPECT_THROW((void)pivotkit::find_low_rank_separation(Graph(7), 3), pivotkit::Error);
  ::setenv("PIVOTKIT_MAX_SUBSET_N", "100", 1);
  EXPECT_EQ(pivotkit::subset_cap(), pivotkit::kMaxSubsetN);
  ::unsetenv("PIVOTKIT_MAX_SUBSET_N");
  EXPECT_EQ(pivotkit::subset_cap(), pivotkit::kMaxSubsetN);
}
