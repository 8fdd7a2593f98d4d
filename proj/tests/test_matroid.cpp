#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pivotkit/cutrank.hpp"
#include "pivotkit/error.hpp"
#include "pivotkit/extremal.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/pivot.hpp"

using pivotkit::BinaryMatroid;
using pivotkit::BitMatrix;
using pivotkit::ElementSet;
using pivotkit::MultiGraph;
using pivotkit::SpanningTree;

namespace {

// Triangle: tree edges e1 = 1, e2 = 2 and closing edge f = 3.
MultiGraph triangle() { return MultiGraph{3, {{1, 0, 1}, {2, 1, 2}, {3, 0, 2}}}; }
SpanningTree triangle_tree() { return SpanningTree{{1, 2}}; }

std::set<ElementSet> as_set(const std::vector<ElementSet>& v) { return {v.begin(), v.end()}; }

pivotkit::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pivotkit::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return pivotkit::ErrorCode::InvalidArgument;
}

}  // namespace

TEST(GraphicMatroid, Examples) {
  const BinaryMatroid tri = pivotkit::graphic_matroid(triangle(), triangle_tree());
  EXPECT_EQ(tri.rep(), BitMatrix::from_rows({{1}, {1}}));
  EXPECT_TRUE(pivotkit::are_isomorphic(tri.fundamental_graph(), pivotkit::BiGraph::complete(1, 2).to_graph()));

  MultiGraph parallel{2, {}};
  for (int i = 0; i < 5; ++i) parallel.edges.push_back({i, 0, 1});
  EXPECT_EQ(pivotkit::graphic_matroid(parallel, SpanningTree{{0}}).rep(), BitMatrix::ones(1, 4));

  const auto fig = pivotkit::gen_ktt_example(5);
  EXPECT_EQ(pivotkit::graphic_matroid(fig.multigraph, fig.tree).rep(), BitMatrix::ones(4, 4));
}

TEST(GraphicMatroid, InvalidTreesAreRejected) {
  EXPECT_EQ(code_of([] { (void)pivotkit::graphic_matroid(triangle(), SpanningTree{{1}}); }),
            pivotkit::ErrorCode::NotASpanningTree);
  EXPECT_EQ(code_of([] { (void)pivotkit::graphic_matroid(triangle(), SpanningTree{{1, 9}}); }),
            pivotkit::ErrorCode::NotASpanningTree);
  const MultiGraph cyc{3, {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}}};
  EXPECT_EQ(code_of([&] { (void)pivotkit::graphic_matroid(cyc, SpanningTree{{0, 1}}); }),
            pivotkit::ErrorCode::NotASpanningTree);
  const MultiGraph split{4, {{0, 0, 1}, {1, 2, 3}}};
  EXPECT_EQ(code_of([&] { (void)pivotkit::graphic_matroid(split, SpanningTree{{0, 1}}); }),
            pivotkit::ErrorCode::NotConnected);
}

TEST(GraphicMatroid, FundamentalMatrixMatchesCycleSpaceOracle) {
  gen::Source src(201);
  for (int i = 0; i < 150; ++i) {
    const auto [g, tree] = src.multigraph(src.uniform(1, 9), src.uniform(0, 7));
    ASSERT_EQ(oracle::to_rows(pivotkit::fundamental_matrix(g, tree)), oracle::fundamental_matrix(g, tree))
        << "trial " << i;
  }
}

TEST(CographicMatroid, Examples) {
  EXPECT_EQ(pivotkit::cographic_matroid(triangle(), triangle_tree()).rep(), BitMatrix::from_rows({{1, 1}}));
  const auto fig = pivotkit::gen_ktt_example(5);
  EXPECT_EQ(pivotkit::cographic_matroid(fig.multigraph, fig.tree).rep(), BitMatrix::ones(4, 4));

  const MultiGraph path{3, {{0, 0, 1}, {1, 1, 2}}};
  const BinaryMatroid co = pivotkit::cographic_matroid(path, SpanningTree{{0, 1}});
  EXPECT_EQ(co.rep().nrows(), 0u);
  EXPECT_EQ(co.rep().ncols(), 2u);
  EXPECT_TRUE(pivotkit::circuits(pivotkit::graphic_matroid(path, SpanningTree{{0, 1}})).empty());
}

TEST(ChangeBasis, Examples) {
  const BinaryMatroid tri = pivotkit::graphic_matroid(triangle(), triangle_tree());
  const BinaryMatroid ex = pivotkit::change_basis(tri, 1, 3);
  EXPECT_EQ(ElementSet(ex.basis().begin(), ex.basis().end()), (ElementSet{3, 2}));
  EXPECT_EQ(ex.rep(), BitMatrix::from_rows({{1}, {1}}));
  EXPECT_EQ(pivotkit::change_basis(ex, 3, 1), tri);

  const BinaryMatroid m({0, 1}, {2}, BitMatrix::from_rows({{1}, {0}}));
  EXPECT_EQ(code_of([&] { (void)pivotkit::change_basis(m, 1, 2); }), pivotkit::ErrorCode::PivotOnZero);
  EXPECT_EQ(code_of([&] { (void)pivotkit::change_basis(m, 2, 0); }), pivotkit::ErrorCode::ElementNotFound);
}

TEST(ChangeBasis, PreservesCircuitsAndPivotsTheFundamentalGraph) {
  gen::Source src(203);
  for (int i = 0; i < 150; ++i) {
    const std::size_t m = src.uniform(2, 9);
    const BinaryMatroid mat = src.matroid(m, src.uniform(1, m - 1));
    const auto base = pivotkit::circuits(mat);
    const auto ground = mat.ground();
    const auto pos = [&](int e) {
      return static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin());
    };
    for (const int x : mat.basis()) {
      for (const int y : mat.cobasis()) {
        if (!mat.rep().get(mat.row_of(x), mat.col_of(y))) continue;
        const BinaryMatroid ex = pivotkit::change_basis(mat, x, y);
        ASSERT_EQ(pivotkit::circuits(ex), base);
        ASSERT_EQ(ex.fundamental_graph(), pivotkit::pivot(mat.fundamental_graph(), pos(x), pos(y)));
        ASSERT_EQ(pivotkit::change_basis(ex, y, x), mat);
      }
    }
  }
}

TEST(Circuits, Examples) {
  const BinaryMatroid tri = pivotkit::graphic_matroid(triangle(), triangle_tree());
  EXPECT_EQ(pivotkit::circuits(tri), (std::vector<ElementSet>{{1, 2, 3}}));

  const BinaryMatroid loop({0, 1}, {5}, BitMatrix(2, 1));
  EXPECT_EQ(pivotkit::circuits(loop), (std::vector<ElementSet>{{5}}));

  MultiGraph k4{4, {}};
  int label = 0;
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = u + 1; v < 4; ++v) k4.edges.push_back({label++, u, v});
  }
  // Spanning star at vertex 0: edges 0, 1, 2.
  EXPECT_EQ(pivotkit::circuits(pivotkit::graphic_matroid(k4, SpanningTree{{0, 1, 2}})).size(), 7u);
}

TEST(Circuits, MatchOracles) {
  gen::Source src(205);
  for (int i = 0; i < 150; ++i) {
    const auto [g, tree] = src.multigraph(src.uniform(1, 6), src.uniform(0, 4));
    const auto got = as_set(pivotkit::circuits(pivotkit::graphic_matroid(g, tree)));
    ASSERT_EQ(got, oracle::cycles(g)) << "trial " << i;
    const std::size_t m = src.uniform(1, 9);
    const BinaryMatroid mat = src.matroid(m, src.uniform(0, m), 0.4);
    ASSERT_EQ(as_set(pivotkit::circuits(mat)), oracle::circuits(mat));
  }
}

TEST(Circuits, CapIsEnforced) {
  const BinaryMatroid big(std::vector<int>(1, 0), [] {
    std::vector<int> c;
    for (int i = 1; i <= static_cast<int>(pivotkit::kCircuitMaxElements); ++i) c.push_back(i);
    return c;
  }(), BitMatrix(1, pivotkit::kCircuitMaxElements));
  EXPECT_EQ(code_of([&] { (void)pivotkit::circuits(big); }), pivotkit::ErrorCode::GroundSetTooLarge);
}

TEST(Minor, Examples) {
  const BinaryMatroid m({0, 1}, {2, 3}, BitMatrix::from_rows({{1, 0}, {1, 1}}));
  const BinaryMatroid del = pivotkit::minor(m, {3}, {});
  EXPECT_EQ(del, BinaryMatroid({0, 1}, {2}, BitMatrix::from_rows({{1}, {1}})));
  const BinaryMatroid con = pivotkit::minor(m, {}, {0});
  EXPECT_EQ(con, BinaryMatroid({1}, {2, 3}, BitMatrix::from_rows({{1, 1}})));

  const BinaryMatroid tri = pivotkit::graphic_matroid(triangle(), triangle_tree());
  const BinaryMatroid contracted = pivotkit::minor(tri, {}, {3});
  EXPECT_EQ(contracted.ground(), (ElementSet{1, 2}));
  EXPECT_EQ(pivotkit::circuits(contracted), (std::vector<ElementSet>{{1, 2}}));

  EXPECT_EQ(code_of([&] { (void)pivotkit::minor(m, {0}, {0}); }), pivotkit::ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { (void)pivotkit::minor(m, {7}, {}); }), pivotkit::ErrorCode::ElementNotFound);
}

TEST(Minor, CommutesWithGraphMinors) {
  gen::Source src(207);
  for (int i = 0; i < 200; ++i) {
    const auto [g, tree] = src.multigraph(src.uniform(1, 6), src.uniform(0, 4));
    std::vector<int> del;
    std::vector<int> con;
    for (const auto& e : g.edges) {
      const std::size_t roll = src.uniform(0, 5);
      if (roll == 0) del.push_back(e.label);
      if (roll == 1) con.push_back(e.label);
    }
    std::sort(del.begin(), del.end());
    std::sort(con.begin(), con.end());
    const BinaryMatroid mm = pivotkit::minor(pivotkit::graphic_matroid(g, tree), del, con);
    ASSERT_EQ(as_set(pivotkit::circuits(mm)), oracle::cycles(oracle::graph_minor(g, del, con))) << "trial " << i;
  }
}

TEST(Lambda, MatchesRankFormulaAndCutRank) {
  gen::Source src(209);
  for (int i = 0; i < 80; ++i) {
    const std::size_t m = src.uniform(1, 9);
    const BinaryMatroid mat = src.matroid(m, src.uniform(0, m));
    const auto ground = mat.ground();
    const auto g = mat.fundamental_graph();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      ElementSet x;
      pivotkit::VertexSet pos;
      for (std::size_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1U) {
          x.push_back(ground[j]);
          pos.push_back(j);
        }
      }
      const std::size_t l = pivotkit::lambda(mat, x);
      ASSERT_EQ(l, oracle::lambda(mat, x));
      ASSERT_EQ(l, pivotkit::cut_rank(g, pos));
    }
  }
}

TEST(Connectivity, AgreesWithRankConnectivity) {
  gen::Source src(211);
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = src.uniform(1, 10);
    const BinaryMatroid mat = src.matroid(m, src.uniform(0, m), 0.6);
    const auto g = mat.fundamental_graph();
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto r = pivotkit::is_k_connected(mat, k);
      const auto sep = pivotkit::find_low_rank_separation(g, k);
      ASSERT_EQ(r.connected, !sep.has_value());
      if (r.witness) {
        ASSERT_EQ(pivotkit::lambda(mat, r.witness->x), r.witness->lambda_value);
        ASSERT_LT(r.witness->lambda_value, r.witness->order);
      }
    }
  }
}

TEST(BinaryMatroid, ConstructionIsValidated) {
  EXPECT_THROW(BinaryMatroid({0, 1}, {2}, BitMatrix(1, 1)), pivotkit::Error);
  EXPECT_THROW(BinaryMatroid({0, 0}, {2}, BitMatrix(2, 1)), pivotkit::Error);
  EXPECT_THROW(BinaryMatroid({0, -1}, {2}, BitMatrix(2, 1)), pivotkit::Error);
}
