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

#include "minordecomp/sparse_cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace minordecomp {

namespace {

struct CoverContext {
  const WeightedGraph& g;
  const PartitionTree& tree;
  double rho;
  Length delta;
  CoverTrace* trace;
  CoverOptions options;
  DomainDistances dd;
  std::size_t initial_width = 0;
  std::map<NodeId, std::vector<VertexId>> nets;
  std::map<std::pair<NodeId, VertexId>, std::vector<VertexId>> balls;

  const std::vector<VertexId>& net(NodeId x) {
    auto it = nets.find(x);
    if (it == nets.end()) {
      it = nets.emplace(x, delta_net(tree.node(x).skeleton, g, delta)).first;
    }
    return it->second;
  }

  // B_{dom(xp)}(p, (2+4rho)delta) as a sorted vertex list.
  const std::vector<VertexId>& cluster_ball(NodeId xp, VertexId p) {
    auto key = std::pair(xp, p);
    auto it = balls.find(key);
    if (it == balls.end()) {
      const Length r = (2.0 + 4.0 * rho) * delta;
      const DistanceMap d = shortest_paths(g, std::span<const VertexId>(&p, 1), tree.domain(xp), r);
      std::vector<VertexId> members;
      for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v] <= r) members.push_back(static_cast<VertexId>(v));
      }
      it = balls.emplace(key, std::move(members)).first;
    }
    return it->second;
  }
};

void cover_rec(CoverContext& ctx, const SubtreeView& t, const VertexSet& active,
               std::size_t level, std::vector<Cluster>& out) {
  if (t.empty()) return;
  const PartitionTree& tree = ctx.tree;
  const std::size_t n = ctx.g.vertex_count();
  const SeparatorSet sep = separator_supernodes(t);

  for (NodeId x : sep.selected) {
    const VertexSet& dom_x = tree.domain(x);
    for (NodeId xp : tree.bag(x)) {
      if (!t.contains(xp)) continue;
      for (VertexId p : ctx.net(xp)) {
        Cluster c;
        c.x = x;
        c.xp = xp;
        c.p = p;
        c.recursion_depth = level;
        c.tree_depth = tree.depth(x);
        for (VertexId v : ctx.cluster_ball(xp, p)) {
          if (dom_x.contains(v) && active.contains(v)) c.vertices.push_back(v);
        }
        if (!c.vertices.empty()) out.push_back(std::move(c));
      }
    }
  }

  const std::vector<SubtreeView> parts = residual_components(t, sep.selected);
  std::vector<int> part_of(tree.size(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (NodeId id : parts[i].members()) part_of[id] = static_cast<int>(i);
  }

  std::vector<VertexSet> sub_active(parts.size(), VertexSet(n));
  const Length reach = 2.0 * ctx.rho * ctx.delta;
  std::size_t routed = 0;
  for (VertexId v : active.to_vector()) {
    NodeId eta = kNoNode;
    for (NodeId y = tree.owner(v); y != kNoNode; y = tree.node(y).parent) {
      if (t.contains(y) && ctx.dd.to_supernode(y)[v] <= reach) eta = y;
    }
    if (eta == kNoNode) {
      throw StructuralError("active vertex " + std::to_string(v) +
                            " is farther than 2*rho*delta from every supernode of the subtree");
    }
    const int part = part_of[eta];
    if (part >= 0) {
      sub_active[part].insert(v);
      ++routed;
    }
  }

  if (ctx.trace != nullptr) {
    CoverTrace& tr = *ctx.trace;
    tr.max_recursion_depth = std::max(tr.max_recursion_depth, level);
    if (level > ctx.initial_width) tr.depth_bounded = false;
    std::size_t total = 0;
    for (const VertexSet& a : sub_active) total += a.size();
    if (total != routed) tr.active_disjoint = false;
    SeparatorStep step;
    step.recursion_depth = level;
    step.width_before = subtree_width(t);
    for (const SubtreeView& part : parts) {
      const std::size_t w = subtree_width(part);
      step.widths_after.push_back(w);
      if (w + 1 > step.width_before) tr.width_reduced = false;
    }
    if (ctx.options.record_steps) {
      step.members = t.members();
      step.separators = sep;
      tr.steps.push_back(std::move(step));
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t before = out.size();
    cover_rec(ctx, parts[i], sub_active[i], level + 1, out);
    if (ctx.trace != nullptr) {
      for (std::size_t k = before; k < out.size(); ++k) {
        for (VertexId v : out[k].vertices) {
          if (!active.contains(v)) ctx.trace->containment = false;
        }
      }
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> memberships(const Cover& c) {
  std::vector<std::vector<std::size_t>> out(c.vertex_count);
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    for (VertexId v : c.clusters[i].vertices) out[v].push_back(i);
  }
  return out;
}

std::size_t max_membership(const Cover& c) {
  std::size_t s = 0;
  for (const auto& m : memberships(c)) s = std::max(s, m.size());
  return s;
}

Cover cover(const WeightedGraph& g, const SubtreeView& t, const VertexSet& active, double rho,
            Length delta, CoverTrace* trace, CoverOptions options) {
  if (!(rho >= 1)) throw std::invalid_argument("cover needs rho >= 1");
  if (!(delta > 0)) throw std::invalid_argument("cover needs delta > 0");
  CoverContext ctx{g, t.tree(), rho, delta, trace, options, DomainDistances(g, t.tree()), 0, {}, {}};
  ctx.initial_width = subtree_width(t);
  if (trace != nullptr) trace->initial_width = std::max(trace->initial_width, ctx.initial_width);
  Cover out;
  out.rho = rho;
  out.delta = delta;
  out.vertex_count = g.vertex_count();
  cover_rec(ctx, t, active, 1, out.clusters);
  if (trace != nullptr) {
    for (const Cluster& c : out.clusters) {
      for (VertexId v : c.vertices) {
        if (!active.contains(v)) trace->containment = false;
      }
    }
  }
  out.s = max_membership(out);
  return out;
}

Cover build_cover(const WeightedGraph& g, const PartitionTree& tree, double rho, Length delta,
                  CoverTrace* trace, CoverOptions options) {
  Cover out;
  out.rho = rho;
  out.delta = delta;
  out.vertex_count = g.vertex_count();
  for (NodeId r : tree.roots()) {
    const SubtreeView view = SubtreeView::Below(tree, r);
    Cover part = cover(g, view, tree.domain(r), rho, delta, trace, options);
    for (Cluster& c : part.clusters) out.clusters.push_back(std::move(c));
  }
  assign_color_classes(out);
  out.s = max_membership(out);
  return out;
}

void assign_color_classes(Cover& c) {
  std::vector<std::size_t> order(c.clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Cluster& x = c.clusters[a];
    const Cluster& y = c.clusters[b];
    return std::tuple(x.tree_depth, x.x, x.xp, x.p) < std::tuple(y.tree_depth, y.x, y.xp, y.p);
  });
  c.color_classes.clear();
  std::vector<std::vector<std::size_t>> used(c.vertex_count);
  for (std::size_t idx : order) {
    std::vector<std::size_t> blocked;
    for (VertexId v : c.clusters[idx].vertices) {
      blocked.insert(blocked.end(), used[v].begin(), used[v].end());
    }
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
    std::size_t color = 0;
    while (color < blocked.size() && blocked[color] == color) ++color;
    if (color == c.color_classes.size()) c.color_classes.emplace_back();
    c.color_classes[color].push_back(idx);
    for (VertexId v : c.clusters[idx].vertices) used[v].push_back(color);
  }
}

double class_count_bound(double rho, Length delta, Length gamma, std::size_t w,
                         std::size_t what, double kappa) {
  const double wh = static_cast<double>(what);
  return kappa * rho * rho * (delta / gamma) * static_cast<double>(w) * wh * wh;
}

CoverReport verify_cover(const Cover& c, const WeightedGraph& g, const VertexSet& universe,
                         Length pad_radius, Length diam_bound) {
  CoverReport report;
  const std::size_t n = g.vertex_count();
  DistanceRows rows(g);
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    const auto& verts = c.clusters[i].vertices;
    if (verts.empty()) continue;
    const auto far = rows.weak_diameter(verts);
    report.max_diameter = std::max(report.max_diameter, far.distance);
    if (far.distance > diam_bound) {
      report.diameter_violations.push_back({i, far.u, far.v, far.distance});
    }
  }

  std::vector<std::vector<std::size_t>> member(n);
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    for (VertexId v : c.clusters[i].vertices) {
      if (v >= 0 && static_cast<std::size_t>(v) < n) member[v].push_back(i);
    }
  }
  for (const auto& m : member) report.s = std::max(report.s, m.size());

  for (VertexId v : universe.to_vector()) {
    ++report.balls_checked;
    const std::vector<VertexId> b =
        ball(g, std::span<const VertexId>(&v, 1), pad_radius, universe).to_vector();
    bool inside = false;
    for (std::size_t i : member[v]) {
      const auto& verts = c.clusters[i].vertices;
      if (std::all_of(b.begin(), b.end(), [&](VertexId u) {
            return std::binary_search(verts.begin(), verts.end(), u);
          })) {
        inside = true;
        break;
      }
    }
    if (!inside) report.padding_violations.push_back({v});
  }

  report.class_count = c.color_classes.size();
  if (!c.color_classes.empty()) {
    std::vector<int> seen(c.clusters.size(), 0);
    for (std::size_t k = 0; k < c.color_classes.size(); ++k) {
      std::vector<std::size_t> holder(n, c.clusters.size());
      for (std::size_t i : c.color_classes[k]) {
        if (i >= c.clusters.size()) {
          report.class_problem = "color class " + std::to_string(k) + " names cluster " +
                                 std::to_string(i) + " which does not exist";
          continue;
        }
        ++seen[i];
        for (VertexId v : c.clusters[i].vertices) {
          if (holder[v] != c.clusters.size()) {
            report.color_violations.push_back({k, holder[v], i, v});
          } else {
            holder[v] = i;
          }
        }
      }
    }
    for (std::size_t i = 0; i < seen.size() && report.class_problem.empty(); ++i) {
      if (seen[i] != 1) {
        report.class_problem = "cluster " + std::to_string(i) + " appears in " +
                               std::to_string(seen[i]) + " color classes";
      }
    }
  }
  return report;
}

}  // namespace minordecomp
