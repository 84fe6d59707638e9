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

#include "minordecomp/oracles.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace minordecomp::oracle {
namespace {

using minordecomp::testing::grid_graph;
using minordecomp::testing::path_graph;

TEST(Apsp, Examples) {
  const WeightedGraph tri(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const Matrix d = apsp_bruteforce(tri);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(d[i][j], i == j ? 0 : 1);
  }
  EXPECT_EQ(apsp_bruteforce(path_graph(4))[0][3], 3);
}

TEST(Apsp, AgreesWithDijkstra) {
  const WeightedGraph g = minordecomp::testing::random_graph(5, 0.6, 31);
  const Matrix d = apsp_bruteforce(g);
  for (VertexId s = 0; s < 5; ++s) {
    const auto row = shortest_paths(g, s);
    for (VertexId v = 0; v < 5; ++v) EXPECT_NEAR(row[v], d[s][v], 1e-12);
  }
}

TEST(Apsp, Refuses) {
  EXPECT_THROW(apsp_bruteforce(path_graph(10), 9), OracleRefusal);
  EXPECT_THROW(minor_search(path_graph(13), 3), OracleRefusal);
}

TEST(PaddedDefinition, Examples) {
  const WeightedGraph one(1, {});
  EXPECT_TRUE(check_padded_definition(one, {0}, 2, 1, 1, {0.1}).front().pass);
  const WeightedGraph p = path_graph(4);
  const auto bad = check_padded_definition(p, {0, 0, 0, 1}, 2, 1, 1, {0.1, 0.2});
  ASSERT_EQ(bad.size(), 2u);
  EXPECT_FALSE(bad[0].pass);
  EXPECT_TRUE(bad[0].witness.has_value());
}

TEST(CoverOracle, Examples) {
  const WeightedGraph p = path_graph(4);
  EXPECT_TRUE(check_cover(p, {{0, 1, 2, 3}}, 1, 3).pass);
  EXPECT_FALSE(check_cover(p, {{0, 1}, {2, 3}}, 1, 3).pass);
  EXPECT_FALSE(check_cover(p, {{0, 1, 2, 3}}, 1, 2).pass);
}

TEST(MinorSearch, Examples) {
  const WeightedGraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  EXPECT_TRUE(minor_search(k4, 4));
  EXPECT_FALSE(minor_search(k4, 5));
  EXPECT_FALSE(minor_search(path_graph(6), 3));
  const WeightedGraph g = grid_graph(3, 3);
  EXPECT_TRUE(minor_search(g, 4));
  EXPECT_FALSE(minor_search(g, 5));
  EXPECT_TRUE(minor_search(minordecomp::testing::cycle_graph(5), 3));
  EXPECT_TRUE(minor_search(WeightedGraph(2, {}), 1));
  EXPECT_FALSE(minor_search(WeightedGraph(2, {}), 2));
}

TEST(MinorSearch, PetersenHasK5) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<VertexId>((i + 1) % 5), 1});
    e.push_back({i, static_cast<VertexId>(i + 5), 1});
    e.push_back({static_cast<VertexId>(i + 5), static_cast<VertexId>((i + 2) % 5 + 5), 1});
  }
  const WeightedGraph petersen(10, e);
  EXPECT_TRUE(minor_search(petersen, 5));
  EXPECT_FALSE(minor_search(petersen, 6));
}

}  // namespace
}  // namespace minordecomp::oracle
