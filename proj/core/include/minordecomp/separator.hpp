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

// Separator supernodes of a connected subtree of a partition tree, and the
// quantities used to check them (subtree-width, threateners).

#ifndef MINORDECOMP_SEPARATOR_HPP_
#define MINORDECOMP_SEPARATOR_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "minordecomp/graph.hpp"
#include "minordecomp/partition_tree.hpp"

namespace minordecomp {

// A connected set of partition-tree nodes. Requires tree caches.
class SubtreeView {
 public:
  // Throws StructuralError if members are not connected in the tree.
  SubtreeView(const PartitionTree& tree, std::vector<NodeId> members);
  // Subtree rooted at `root`.
  static SubtreeView Below(const PartitionTree& tree, NodeId root);

  const PartitionTree& tree() const { return *tree_; }
  const std::vector<NodeId>& members() const { return members_; }  // sorted
  bool empty() const { return members_.empty(); }
  // Minimum-depth member; kNoNode for an empty view.
  NodeId root() const { return root_; }
  bool contains(NodeId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < mask_.size() && mask_[id] != 0;
  }

 private:
  const PartitionTree* tree_;
  std::vector<NodeId> members_;
  std::vector<char> mask_;
  NodeId root_ = kNoNode;
};

struct SeparatorSet {
  std::vector<NodeId> selected;       // selection order
  std::map<NodeId, NodeId> marked_by;  // member -> separator that marked it
};

// Greedy selection: repeatedly take the unmarked member of minimum depth
// (smallest id on ties), let M = bag(X) within the view, and mark every
// descendant of X in the view whose bag meets M.
SeparatorSet separator_supernodes(const SubtreeView& t);

// max over members of |bag(eta) within the view|; 0 when empty.
std::size_t subtree_width(const SubtreeView& t);

// Connected pieces of the view after removing `removed`, ordered by root id.
std::vector<SubtreeView> residual_components(const SubtreeView& t,
                                             const std::vector<NodeId>& removed);

// Separators X with v in dom(X) and some X' in bag(X) within the view at
// distance <= alpha*delta from v inside dom(X').
std::vector<NodeId> threateners(VertexId v, const SeparatorSet& x, const SubtreeView& t,
                                double alpha, Length delta, DomainDistances& dd);

// Bound 2*alpha*delta/gamma + 2 evaluated against every vertex of the view's
// root domain.
struct ThreatenerCheck {
  double alpha = 1;
  double bound = 0;
  std::size_t max_count = 0;
  VertexId worst_vertex = -1;
  bool ok = true;
};
ThreatenerCheck check_threateners(const SeparatorSet& x, const SubtreeView& t, double alpha,
                                  Length delta, Length gamma, DomainDistances& dd);

// {"selected":[..], "marked_by":{"id":id,..}, "widths":{"before":w,
//  "components":[{"root":id,"size":k,"width":w},..]}}
std::string separator_to_json(const SubtreeView& t, const SeparatorSet& x);

}  // namespace minordecomp

#endif  // MINORDECOMP_SEPARATOR_HPP_
