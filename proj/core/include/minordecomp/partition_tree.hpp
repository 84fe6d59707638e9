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

// Partition trees of supernodes (the object produced by a cop decomposition)
// and exact verifiers for the buffered-cop-decomposition properties.
//
// A supernode is a vertex set grown around a skeleton tree. The supernodes of
// a partition tree partition V(G). For a node eta:
//   dom(eta)  = vertices of all supernodes in the subtree rooted at eta,
//   bag(eta)  = {eta} plus every proper ancestor with an edge into dom(eta).
// Lifting every bag to the union of its supernodes' vertices gives a tree
// decomposition of G with the same shape as the partition tree.

#ifndef MINORDECOMP_PARTITION_TREE_HPP_
#define MINORDECOMP_PARTITION_TREE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minordecomp/graph.hpp"

namespace minordecomp {

struct SkeletonTree {
  VertexId root = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  // Root plus edge endpoints, sorted.
  std::vector<VertexId> vertices() const;
  // Degree-one vertices other than the root.
  std::size_t leaf_count() const;
};

struct Supernode {
  NodeId id = 0;
  std::vector<VertexId> vertices;  // sorted
  SkeletonTree skeleton;
  NodeId parent = kNoNode;
  std::size_t creation_index = 0;
  // Radius the builder grew the supernode with. Informational only; the
  // verifiers measure the actual radius.
  Length radius = 0;
};

class PartitionTree {
 public:
  PartitionTree() = default;
  PartitionTree(std::size_t vertex_count, std::vector<Supernode> supernodes)
      : vertex_count_(vertex_count), nodes_(std::move(supernodes)) {}

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Supernode>& supernodes() const { return nodes_; }
  const Supernode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  // Everything below requires compute_domains_and_bags().
  bool has_caches() const { return cached_; }
  // One root per connected component of G, sorted by id.
  const std::vector<NodeId>& roots() const { return roots_; }
  NodeId owner(VertexId v) const { return owner_[v]; }
  int depth(NodeId id) const { return depth_[id]; }
  const std::vector<NodeId>& children(NodeId id) const { return children_[id]; }
  // True when `ancestor` lies on the root path of `node` (inclusive).
  bool is_ancestor(NodeId ancestor, NodeId node) const {
    return tin_[ancestor] <= tin_[node] && tout_[node] <= tout_[ancestor];
  }
  const VertexSet& domain(NodeId id) const { return domain_[id]; }
  // Sorted by node id; always contains `id` itself.
  const std::vector<NodeId>& bag(NodeId id) const { return bag_[id]; }
  bool bag_contains(NodeId id, NodeId member) const;
  // Roots first, children in id order.
  const std::vector<NodeId>& preorder() const { return preorder_; }

 private:
  friend PartitionTree compute_domains_and_bags(PartitionTree tree, const WeightedGraph& g);

  std::size_t vertex_count_ = 0;
  std::vector<Supernode> nodes_;

  bool cached_ = false;
  std::vector<NodeId> roots_;
  std::vector<NodeId> owner_;
  std::vector<int> depth_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  std::vector<NodeId> preorder_;
  std::vector<VertexSet> domain_;
  std::vector<std::vector<NodeId>> bag_;
};

// Validates the partition and parent links and fills the caches. Throws
// StructuralError naming the offending vertex or node.
PartitionTree compute_domains_and_bags(PartitionTree tree, const WeightedGraph& g);

// Cached d_{dom(eta)}(., eta): distance from every vertex to supernode eta
// measured inside G[dom(eta)]; +infinity outside dom(eta). Not thread-safe.
class DomainDistances {
 public:
  DomainDistances(const WeightedGraph& g, const PartitionTree& tree);
  const DistanceMap& to_supernode(NodeId id);

 private:
  const WeightedGraph* g_;
  const PartitionTree* tree_;
  std::vector<std::optional<DistanceMap>> cache_;
};

struct TreeDecompositionCheck {
  bool valid = true;
  std::string violation;
};

// Checks that the expanded bags form a tree decomposition: bags cover V,
// every edge lies in some bag, and bags holding a vertex form a subtree.
TreeDecompositionCheck verify_tree_decomposition(const PartitionTree& tree, const WeightedGraph& g);

enum class ViolationKind {
  kRadius,
  kSkeletonShape,
  kSkeletonShortestPath,
  kSkeletonLeaves,
  kBuffer,
  kBagSize,
  kTreeDecomposition,
};
std::string_view to_string(ViolationKind kind);

struct BufferViolation {
  ViolationKind kind = ViolationKind::kRadius;
  NodeId node = kNoNode;
  NodeId ancestor = kNoNode;  // buffer violations only
  VertexId witness = -1;
  Length value = 0;
  std::string detail;
};

struct BufferReport {
  Length max_radius = 0;
  std::size_t max_bag_size = 0;
  std::size_t max_skeleton_leaves = 0;
  // Minimum over (eta, ancestor not in bag(eta)) pairs of the domain distance
  // from dom(eta) to that ancestor; +infinity when no such pair exists.
  Length gamma_eff = kInfinity;
  bool buffer_checked = true;
  std::vector<BufferViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

struct BufferCheckOptions {
  bool skip_buffer = false;
};

// Exact check of the four (delta, gamma, w)-buffered cop decomposition
// properties. Violations are returned as data.
BufferReport verify_buffered(const PartitionTree& tree, const WeightedGraph& g, Length delta,
                             Length gamma, std::size_t w, BufferCheckOptions options = {});

// Greedy delta-net of the skeleton under its own tree metric. Candidates are
// scanned by (tree distance from the root, vertex id); a candidate is kept
// when it is farther than delta from every kept point. The root is first.
std::vector<VertexId> delta_net(const SkeletonTree& skeleton, const WeightedGraph& g, Length delta);

// Distances along skeleton edges from `source` to every skeleton vertex
// (+infinity for non-skeleton vertices).
DistanceMap skeleton_distances(const SkeletonTree& skeleton, const WeightedGraph& g,
                               VertexId source);

// Net-sparsity surrogate: for every supernode eta and
// v in dom(eta), counts net points within alpha*delta of v in dom(eta) and
// compares against 2(alpha+1)w. Reported, never enforced.
struct NetSparsityReport {
  std::size_t max_count = 0;
  double bound = 0;
  std::size_t exceed_count = 0;
};
NetSparsityReport net_sparsity(const PartitionTree& tree, const WeightedGraph& g, Length delta,
                               double alpha, std::size_t w);

// Partition-tree JSON:
//   {"schema_version":1, "vertex_count":n,
//    "supernodes":[{"id","parent","vertices":[..],
//                   "skeleton":{"root","edges":[[u,v],..]}, "radius"}]}
// "parent" is null for roots. Parsing does not compute caches.
std::string tree_to_json(const PartitionTree& tree);
PartitionTree tree_from_json(std::string_view text);

}  // namespace minordecomp

#endif  // MINORDECOMP_PARTITION_TREE_HPP_
