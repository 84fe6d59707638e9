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

#include "minordecomp/separator.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace minordecomp {

SubtreeView::SubtreeView(const PartitionTree& tree, std::vector<NodeId> members)
    : tree_(&tree), members_(std::move(members)), mask_(tree.size(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (NodeId id : members_) {
    if (id < 0 || static_cast<std::size_t>(id) >= tree.size()) {
      throw StructuralError("subtree member " + std::to_string(id) + " out of range");
    }
    mask_[id] = 1;
  }
  std::size_t tops = 0;
  for (NodeId id : members_) {
    const NodeId p = tree.node(id).parent;
    if (p == kNoNode || !contains(p)) {
      ++tops;
      root_ = id;
    }
  }
  if (tops > 1) throw StructuralError("subtree members are not connected");
}

SubtreeView SubtreeView::Below(const PartitionTree& tree, NodeId root) {
  std::vector<NodeId> members;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    members.push_back(x);
    for (NodeId c : tree.children(x)) stack.push_back(c);
  }
  return SubtreeView(tree, std::move(members));
}

namespace {

// Members of the view in the subtree of x, x first.
std::vector<NodeId> view_descendants(const SubtreeView& t, NodeId x) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{x};
  while (!stack.empty()) {
    const NodeId y = stack.back();
    stack.pop_back();
    out.push_back(y);
    for (NodeId c : t.tree().children(y)) {
      if (t.contains(c)) stack.push_back(c);
    }
  }
  return out;
}

std::vector<NodeId> bag_in_view(const SubtreeView& t, NodeId id) {
  std::vector<NodeId> out;
  for (NodeId b : t.tree().bag(id)) {
    if (t.contains(b)) out.push_back(b);
  }
  return out;
}

}  // namespace

SeparatorSet separator_supernodes(const SubtreeView& t) {
  SeparatorSet out;
  const PartitionTree& tree = t.tree();
  std::vector<NodeId> order = t.members();
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::pair(tree.depth(a), a) < std::pair(tree.depth(b), b);
  });
  // Marking only reaches descendants, so scanning by depth finds the next
  // unmarked node of minimum depth.
  for (NodeId x : order) {
    if (out.marked_by.contains(x)) continue;
    out.selected.push_back(x);
    const std::vector<NodeId> m = bag_in_view(t, x);
    for (NodeId eta : view_descendants(t, x)) {
      if (out.marked_by.contains(eta)) continue;
      const auto& bag = tree.bag(eta);
      const bool hit = std::any_of(m.begin(), m.end(), [&](NodeId b) {
        return std::binary_search(bag.begin(), bag.end(), b);
      });
      if (hit) out.marked_by[eta] = x;
    }
  }
  return out;
}

std::size_t subtree_width(const SubtreeView& t) {
  std::size_t w = 0;
  for (NodeId id : t.members()) w = std::max(w, bag_in_view(t, id).size());
  return w;
}

std::vector<SubtreeView> residual_components(const SubtreeView& t,
                                             const std::vector<NodeId>& removed) {
  std::vector<char> gone(t.tree().size(), 0);
  for (NodeId x : removed) gone[x] = 1;
  std::vector<SubtreeView> out;
  for (NodeId id : t.members()) {
    if (gone[id]) continue;
    const NodeId p = t.tree().node(id).parent;
    if (p != kNoNode && t.contains(p) && !gone[p]) continue;
    std::vector<NodeId> piece;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
      const NodeId y = stack.back();
      stack.pop_back();
      piece.push_back(y);
      for (NodeId c : t.tree().children(y)) {
        if (t.contains(c) && !gone[c]) stack.push_back(c);
      }
    }
    out.emplace_back(t.tree(), std::move(piece));
  }
  return out;
}

std::vector<NodeId> threateners(VertexId v, const SeparatorSet& x, const SubtreeView& t,
                                double alpha, Length delta, DomainDistances& dd) {
  std::vector<NodeId> out;
  const Length limit = alpha * delta;
  for (NodeId s : x.selected) {
    if (!t.tree().domain(s).contains(v)) continue;
    for (NodeId b : bag_in_view(t, s)) {
      if (dd.to_supernode(b)[v] <= limit) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

ThreatenerCheck check_threateners(const SeparatorSet& x, const SubtreeView& t, double alpha,
                                  Length delta, Length gamma, DomainDistances& dd) {
  ThreatenerCheck out;
  out.alpha = alpha;
  out.bound = 2.0 * alpha * delta / gamma + 2.0;
  if (t.empty()) return out;
  for (VertexId v : t.tree().domain(t.root()).to_vector()) {
    const std::size_t k = threateners(v, x, t, alpha, delta, dd).size();
    if (k > out.max_count || out.worst_vertex < 0) {
      out.max_count = k;
      out.worst_vertex = v;
    }
  }
  out.ok = static_cast<double>(out.max_count) <= out.bound;
  return out;
}

std::string separator_to_json(const SubtreeView& t, const SeparatorSet& x) {
  using nlohmann::json;
  json marked = json::object();
  for (auto [node, by] : x.marked_by) marked[std::to_string(node)] = by;
  json comps = json::array();
  for (const SubtreeView& c : residual_components(t, x.selected)) {
    comps.push_back({{"root", c.root()}, {"size", c.members().size()}, {"width", subtree_width(c)}});
  }
  json doc = {
      {"schema_version", 1},
      {"selected", x.selected},
      {"marked_by", std::move(marked)},
      {"widths", {{"before", subtree_width(t)}, {"components", std::move(comps)}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace minordecomp
