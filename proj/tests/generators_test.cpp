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

#include "minordecomp/generators.hpp"

#include <gtest/gtest.h>

#include "minordecomp/io.hpp"
#include "minordecomp/oracles.hpp"

namespace minordecomp {
namespace {

FamilySpec spec(Family f, std::size_t n, std::uint64_t seed = 0) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.seed = seed;
  return s;
}

bool connected(const WeightedGraph& g) {
  return g.vertex_count() == 0 ||
         connected_components(g, VertexSet::All(g.vertex_count())).size() == 1;
}

TEST(Generate, SmallGrid) {
  FamilySpec s;
  s.rows = 2;
  s.cols = 2;
  const WeightedGraph g = generate(s);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(Generate, BinaryTree) {
  const WeightedGraph g = generate(spec(Family::kTree, 7));
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(connected(g));
  EXPECT_FALSE(oracle::minor_search(g, 3));
}

TEST(Generate, SeriesParallelDepthThreeIsK4Free) {
  FamilySpec s;
  s.family = Family::kSeriesParallel;
  s.depth = 3;
  const WeightedGraph g = generate(s);
  EXPECT_LE(g.vertex_count(), 12u);
  EXPECT_TRUE(connected(g));
  EXPECT_FALSE(oracle::minor_search(g, 4));
  EXPECT_TRUE(oracle::minor_search(g, 3));
}

TEST(Generate, DeclaredForbiddenMinorOnSmallInstances) {
  std::vector<FamilySpec> specs;
  FamilySpec grid;
  grid.rows = 3;
  grid.cols = 4;
  specs.push_back(grid);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    FamilySpec t = spec(Family::kTree, 11, seed);
    t.tree_shape = TreeShape::kRandom;
    specs.push_back(t);
    specs.push_back(spec(Family::kSeriesParallel, 12, seed));
    specs.push_back(spec(Family::kOuterplanar, 12, seed));
  }
  FamilySpec k5;
  k5.family = Family::kComplete;
  k5.m = 5;
  specs.push_back(k5);
  for (const FamilySpec& s : specs) {
    const WeightedGraph g = generate(s);
    ASSERT_LE(g.vertex_count(), 12u);
    EXPECT_FALSE(oracle::minor_search(g, forbidden_clique(s))) << family_name(s.family);
  }
  EXPECT_TRUE(oracle::minor_search(generate(k5), 5));
}

TEST(Generate, ConnectedAndDeterministic) {
  for (Family f : {Family::kGridWeighted, Family::kTree, Family::kSeriesParallel,
                   Family::kOuterplanar, Family::kExpanderLike}) {
    for (WeightMode w : {WeightMode::kUnit, WeightMode::kUniformRandom, WeightMode::kGeometric}) {
      FamilySpec s = spec(f, 40, 17);
      s.rows = 5;
      s.cols = 8;
      s.weights = w;
      s.tree_shape = TreeShape::kRandom;
      const WeightedGraph g = generate(s);
      EXPECT_TRUE(connected(g)) << family_name(f);
      EXPECT_EQ(format_edge_list(g), format_edge_list(generate(s)));
      s.seed = 18;
      EXPECT_NE(format_edge_list(g), format_edge_list(generate(s))) << family_name(f);
    }
  }
}

TEST(Generate, WeightedGridWeightsInRange) {
  FamilySpec s;
  s.family = Family::kGridWeighted;
  s.rows = 4;
  s.cols = 4;
  const WeightedGraph g = generate(s);
  for (const Edge& e : g.edges()) {
    EXPECT_GE(e.w, 1);
    EXPECT_LT(e.w, 2);
  }
}

TEST(Generate, ConfigErrors) {
  EXPECT_THROW(generate(FamilySpec{}), ConfigError);
  EXPECT_THROW(generate(spec(Family::kOuterplanar, 2)), ConfigError);
  EXPECT_THROW(parse_family("torus"), ConfigError);
  EXPECT_THROW(parse_weight_mode("heavy"), ConfigError);
  EXPECT_EQ(parse_family(family_name(Family::kExpanderLike)), Family::kExpanderLike);
}

}  // namespace
}  // namespace minordecomp
