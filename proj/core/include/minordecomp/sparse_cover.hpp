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

// Recursive sparse partition cover built from separator supernodes, greedy
// color classes, and an exact cover verifier.

#ifndef MINORDECOMP_SPARSE_COVER_HPP_
#define MINORDECOMP_SPARSE_COVER_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minordecomp/graph.hpp"
#include "minordecomp/partition_tree.hpp"
#include "minordecomp/separator.hpp"

namespace minordecomp {

struct Cluster {
  NodeId x = kNoNode;   // separator supernode
  NodeId xp = kNoNode;  // bag member whose net point seeds the cluster
  VertexId p = -1;      // net point of xp
  std::vector<VertexId> vertices;  // sorted, nonempty
  std::size_t recursion_depth = 0;
  int tree_depth = 0;  // depth of x in the partition tree
};

struct Cover {
  std::vector<Cluster> clusters;
  // Each class lists cluster indices of pairwise-disjoint clusters.
  std::vector<std::vector<std::size_t>> color_classes;
  double rho = 1;
  Length delta = 1;
  std::size_t s = 0;  // max number of clusters containing one vertex

  std::size_t vertex_count = 0;
};

// Clusters containing each vertex, as cluster indices in increasing order.
std::vector<std::vector<std::size_t>> memberships(const Cover& c);
std::size_t max_membership(const Cover& c);

// One SeparatorSupernodes execution inside the recursion.
struct SeparatorStep {
  std::size_t recursion_depth = 0;
  std::vector<NodeId> members;
  SeparatorSet separators;
  std::size_t width_before = 0;
  std::vector<std::size_t> widths_after;  // per residual component
};

struct CoverTrace {
  std::vector<SeparatorStep> steps;
  std::size_t initial_width = 0;
  std::size_t max_recursion_depth = 0;
  bool width_reduced = true;     // every residual width <= width_before - 1
  bool depth_bounded = true;     // recursion depth <= initial width
  bool active_disjoint = true;   // sibling active sets are disjoint
  bool containment = true;       // clusters lie inside their call's active set
};

struct CoverOptions {
  bool record_steps = true;
};

// Cover(T, A): clusters B_{dom(X')}(p, (2+4rho)delta) within dom(X) and A for
// every separator X, X' in bag(X) within T and p in net(X'). Active vertices
// go to the residual component holding eta[v], the highest member of T with
// d_{dom(eta)}(v, eta) <= 2 rho delta. Throws StructuralError naming v when
// no member qualifies.
Cover cover(const WeightedGraph& g, const SubtreeView& t, const VertexSet& active, double rho,
            Length delta, CoverTrace* trace = nullptr, CoverOptions options = {});

// Runs cover on each root of the partition tree with A = dom(root), then
// colors and fills s.
Cover build_cover(const WeightedGraph& g, const PartitionTree& tree, double rho, Length delta,
                  CoverTrace* trace = nullptr, CoverOptions options = {});

// Greedy first fit in order (depth of X, X, X', p).
void assign_color_classes(Cover& c);

// Report-only surrogate kappa * rho^2 * (delta/gamma) * w * what^2.
double class_count_bound(double rho, Length delta, Length gamma, std::size_t w,
                         std::size_t what, double kappa = 64);

struct CoverReport {
  struct DiameterViolation {
    std::size_t cluster = 0;
    VertexId u = -1;
    VertexId v = -1;
    Length distance = 0;
  };
  struct PaddingViolation {
    VertexId center = -1;
  };
  struct ColorViolation {
    std::size_t color = 0;
    std::size_t first = 0;
    std::size_t second = 0;
    VertexId shared = -1;
  };

  Length max_diameter = 0;
  std::size_t s = 0;
  std::size_t class_count = 0;
  std::size_t balls_checked = 0;
  std::vector<DiameterViolation> diameter_violations;
  std::vector<PaddingViolation> padding_violations;
  std::vector<ColorViolation> color_violations;
  std::string class_problem;  // indices missing or repeated across classes

  bool ok() const {
    return diameter_violations.empty() && padding_violations.empty() &&
           color_violations.empty() && class_problem.empty();
  }
};

// Exact check of the sparse-cover conditions: every cluster has weak
// diameter <= diam_bound, every ball(v, pad_radius) taken inside G[universe]
// for v in universe lies in one cluster, and color classes (if any) are
// disjoint partitions of the cluster list.
CoverReport verify_cover(const Cover& c, const WeightedGraph& g, const VertexSet& universe,
                         Length pad_radius, Length diam_bound);

// {"schema_version":1, "vertex_count":n, "params":{"rho","delta"},
//  "clusters":[{"X","Xp","p","vertices","depth"}], "color_classes":[[..]],
//  "stats":{"s","max_diam","class_count"}}
std::string cover_to_json(const Cover& c, Length max_diameter);
Cover cover_from_json(std::string_view text);

}  // namespace minordecomp

#endif  // MINORDECOMP_SPARSE_COVER_HPP_
