// Copyright 2026 The minordecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minordecomp/partition_tree.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "minordecomp/cop_builder.hpp"
#include "minordecomp/io.hpp"
#include "minordecomp/oracles.hpp"
#include "minordecomp/rng.hpp"
#include "test_util.hpp"

namespace minordecomp {
namespace {

using testing::grid_graph;
using testing::make_tree;
using testing::NodeSpec;
using testing::path_graph;

TEST(DomainsAndBags, SingleSupernode) {
  const WeightedGraph g = path_graph(3);
  const PartitionTree t = make_tree(g, {{{0, 1, 2}, kNoNode, 1, {{1, 0}, {1, 2}}}});
  EXPECT_EQ(t.roots(), std::vector<NodeId>{0});
  EXPECT_EQ(t.domain(0), VertexSet::All(3));
  EXPECT_EQ(t.bag(0), std::vector<NodeId>{0});
}

TEST(DomainsAndBags, PathChild) {
  const WeightedGraph g = path_graph(3);
  const PartitionTree t = make_tree(g, {{{0, 1}, kNoNode, 0, {{0, 1}}}, {{2}, 0}});
  EXPECT_EQ(t.bag(1), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(t.domain(1), VertexSet(3, {2}));
  EXPECT_EQ(t.depth(1), 1);
}

TEST(DomainsAndBags, GridRowsChained) {
  const WeightedGraph g = grid_graph(3, 3);
  const PartitionTree t = make_tree(g, {{{0, 1, 2}, kNoNode, 0, {{0, 1}, {1, 2}}},
                                        {{3, 4, 5}, 0, 3, {{3, 4}, {4, 5}}},
                                        {{6, 7, 8}, 1, 6, {{6, 7}, {7, 8}}}});
  EXPECT_EQ(t.bag(2), (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(t.bag(1), (std::vector<NodeId>{0, 1}));
  EXPECT_TRUE(t.is_ancestor(0, 2));
  EXPECT_FALSE(t.is_ancestor(2, 0));
}

TEST(DomainsAndBags, RejectsNonPartitions) {
  const WeightedGraph g = path_graph(3);
  try {
    make_tree(g, {{{0, 1}}, {{1, 2}, 0}});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1"), std::string::npos);
  }
  try {
    make_tree(g, {{{0, 1}}});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
}

TEST(DomainsAndBags, RejectsParentCycle) {
  const WeightedGraph g = path_graph(3);
  EXPECT_THROW(make_tree(g, {{{0}}, {{1}, 2}, {{2}, 1}}), StructuralError);
}

TEST(VerifyBuffered, SingleSupernodeHasInfiniteBuffer) {
  const WeightedGraph g = path_graph(3);
  const PartitionTree t = make_tree(g, {{{0, 1, 2}, kNoNode, 1}});
  const BufferReport r = verify_buffered(t, g, 1, 0, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.max_radius, 1);
  EXPECT_EQ(r.gamma_eff, kInfinity);
}

TEST(VerifyBuffered, AdjacentChildIsVacuous) {
  const WeightedGraph g = path_graph(3);
  const PartitionTree t = make_tree(g, {{{0, 1}, kNoNode, 0, {{0, 1}}}, {{2}, 0}});
  const BufferReport r = verify_buffered(t, g, 1, 5, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.gamma_eff, kInfinity);
}

TEST(VerifyBuffered, SixVertexBufferMatchesOracle) {
  // Path 0-1-2-3-4-5 with supernodes {0}, {1,2}, {3,4,5} chained. The
  // grandchild is not adjacent to the root.
  const WeightedGraph g = path_graph(6);
  const PartitionTree t =
      make_tree(g, {{{0}}, {{1, 2}, 0, 1, {{1, 2}}}, {{3, 4, 5}, 1, 3}});
  ASSERT_EQ(t.bag(2), (std::vector<NodeId>{1, 2}));
  const auto d = oracle::distance_to_set(oracle::apsp_induced(g, t.domain(0)), {0});
  Length expected = kInfinity;
  for (VertexId v : t.domain(2).to_vector()) expected = std::min(expected, d[v]);
  EXPECT_EQ(expected, 3);
  const BufferReport r = verify_buffered(t, g, 2, 3, 6);
  EXPECT_EQ(r.gamma_eff, expected);
  EXPECT_TRUE(r.ok());
  const BufferReport strict = verify_buffered(t, g, 2, 3.5, 6);
  EXPECT_EQ(strict.count(ViolationKind::kBuffer), 1u);
}

TEST(VerifyBuffered, ReportsEachProperty) {
  const WeightedGraph g = path_graph(6);
  const PartitionTree t =
      make_tree(g, {{{0}}, {{1, 2}, 0, 1, {{1, 2}}}, {{3, 4, 5}, 1, 3}});
  EXPECT_EQ(verify_buffered(t, g, 1, 0, 6).count(ViolationKind::kRadius), 1u);
  EXPECT_EQ(verify_buffered(t, g, 2, 0, 1).count(ViolationKind::kBagSize), 2u);
  const WeightedGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const PartitionTree s = make_tree(star, {{{0, 1, 2, 3}, kNoNode, 1, {{1, 0}, {0, 2}, {0, 3}}}});
  EXPECT_EQ(verify_buffered(s, star, 3, 0, 2).count(ViolationKind::kSkeletonLeaves), 1u);
  EXPECT_EQ(verify_buffered(s, star, 3, 0, 3).count(ViolationKind::kSkeletonLeaves), 0u);
}

TEST(VerifyBuffered, NonShortestSkeletonPath) {
  // Cycle 0-1-2-3 with a long edge 0-3: the skeleton path 0-1-2-3 is not
  // geodesic once 0-3 is short.
  const WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const PartitionTree t = make_tree(g, {{{0, 1, 2, 3}, kNoNode, 0, {{0, 1}, {1, 2}, {2, 3}}}});
  EXPECT_EQ(verify_buffered(t, g, 3, 0, 4).count(ViolationKind::kSkeletonShortestPath), 1u);
}

TEST(TreeDecomposition, SingleSupernodeIsValid) {
  const WeightedGraph g = grid_graph(2, 2);
  EXPECT_TRUE(verify_tree_decomposition(make_tree(g, {{{0, 1, 2, 3}}}), g).valid);
}

TEST(TreeDecomposition, Star) {
  const WeightedGraph g(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  const PartitionTree t = make_tree(g, {{{0}}, {{1}, 0}, {{2}, 0}, {{3}, 0}, {{4}, 0}});
  EXPECT_TRUE(verify_tree_decomposition(t, g).valid);
  for (NodeId leaf = 1; leaf <= 4; ++leaf) EXPECT_EQ(t.bag(leaf), (std::vector<NodeId>{0, leaf}));
}

TEST(TreeDecomposition, CorruptedParentIsCaught) {
  const WeightedGraph g = path_graph(5);
  std::vector<NodeSpec> spec{{{0}}, {{1}, 0}, {{2}, 1}, {{3}, 2}, {{4}, 3}};
  ASSERT_TRUE(verify_tree_decomposition(make_tree(g, spec), g).valid);
  spec[4].parent = 2;
  const TreeDecompositionCheck bad = verify_tree_decomposition(make_tree(g, spec), g);
  EXPECT_FALSE(bad.valid);
  EXPECT_NE(bad.violation.find("(3,4)"), std::string::npos);
  EXPECT_EQ(verify_buffered(make_tree(g, spec), g, 1, 0, 5).count(ViolationKind::kTreeDecomposition),
            1u);
}

// Every valid net of a unit path rooted at 0, by enumeration.
std::vector<std::vector<VertexId>> all_path_nets(int n, Length delta) {
  std::vector<std::vector<VertexId>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (!(mask & 1)) continue;
    std::vector<VertexId> pts;
    for (int v = 0; v < n; ++v) {
      if (mask & (1 << v)) pts.push_back(v);
    }
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) ok = ok && pts[j] - pts[i] > delta;
    }
    for (int v = 0; v < n && ok; ++v) {
      ok = std::any_of(pts.begin(), pts.end(), [&](VertexId p) { return std::abs(p - v) <= delta; });
    }
    if (ok) out.push_back(pts);
  }
  return out;
}

TEST(DeltaNet, Examples) {
  const WeightedGraph one(1, {});
  EXPECT_EQ(delta_net(SkeletonTree{0, {}}, one, 2), std::vector<VertexId>{0});

  const WeightedGraph p = path_graph(6);
  const SkeletonTree path{0, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  const auto net = delta_net(path, p, 2);
  EXPECT_EQ(net, (std::vector<VertexId>{0, 3}));
  const auto valid = all_path_nets(6, 2);
  EXPECT_NE(std::find(valid.begin(), valid.end(), net), valid.end());

  const WeightedGraph star(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  EXPECT_EQ(delta_net(SkeletonTree{0, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}, star, 3),
            std::vector<VertexId>{0});
}

TEST(DeltaNet, ValidOnRandomPaths) {
  for (int n = 1; n <= 10; ++n) {
    const WeightedGraph p = path_graph(static_cast<std::size_t>(n));
    SkeletonTree sk{0, {}};
    for (int i = 0; i + 1 < n; ++i) sk.edges.emplace_back(i, i + 1);
    for (Length delta : {0.5, 1.0, 2.0, 3.0}) {
      const auto valid = all_path_nets(n, delta);
      const auto net = delta_net(sk, p, delta);
      EXPECT_NE(std::find(valid.begin(), valid.end(), net), valid.end()) << n << " " << delta;
    }
  }
}

TEST(SkeletonDistances, AlongSkeletonOnly) {
  const WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1.5}, {2, 3, 1}});
  const auto d = skeleton_distances(SkeletonTree{0, {{0, 1}, {1, 2}}}, g, 0);
  EXPECT_EQ(d[2], 2);
  EXPECT_EQ(d[3], kInfinity);
  EXPECT_THROW(skeleton_distances(SkeletonTree{0, {{0, 3}}}, g, 0), StructuralError);
}

TEST(TreeJson, RoundTrip) {
  const WeightedGraph g = grid_graph(4, 4);
  CopConfig cfg;
  cfg.delta = 2;
  cfg.seed = 11;
  const PartitionTree t = build_cop_decomposition(g, cfg);
  const std::string text = tree_to_json(t);
  EXPECT_EQ(tree_to_json(tree_from_json(text)), text);
  EXPECT_THROW(tree_from_json("{"), ParseError);
  EXPECT_THROW(tree_from_json(R"({"schema_version":1})"), ParseError);
}

// Partition property and bag monotonicity along ancestor chains on built trees.
TEST(PartitionTreeInvariants, BuiltTrees) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = grid_graph(3 + trial % 4, 4 + trial % 3);
    CopConfig cfg;
    cfg.delta = 1 + trial % 3;
    cfg.seed = rng.next();
    const PartitionTree t = build_cop_decomposition(g, cfg);
    std::size_t total = 0;
    std::vector<int> seen(g.vertex_count(), 0);
    for (const Supernode& s : t.supernodes()) {
      total += s.vertices.size();
      for (VertexId v : s.vertices) ++seen[v];
    }
    EXPECT_EQ(total, g.vertex_count());
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    for (NodeId low = 0; low < static_cast<NodeId>(t.size()); ++low) {
      for (NodeId mid = 0; mid < static_cast<NodeId>(t.size()); ++mid) {
        if (!t.is_ancestor(mid, low)) continue;
        for (NodeId high : t.bag(low)) {
          if (t.is_ancestor(high, mid)) {
            EXPECT_TRUE(t.bag_contains(mid, high));
          }
        }
      }
    }
  }
}

TEST(NetSparsity, ReportsBound) {
  const WeightedGraph g = grid_graph(5, 5);
  CopConfig cfg;
  cfg.delta = 2;
  const PartitionTree t = build_cop_decomposition(g, cfg);
  const NetSparsityReport r = net_sparsity(t, g, 2, 1, 4);
  EXPECT_EQ(r.bound, 16);
  EXPECT_GE(r.max_count, 1u);
}

}  // namespace
}  // namespace minordecomp
