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

#include "minordecomp/cop_builder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "minordecomp/rng.hpp"
#include "minordecomp/texp.hpp"

namespace minordecomp {

double default_radius_lambda(std::size_t n) {
  return 2.0 + 2.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
}

PartitionTree build_cop_decomposition(const WeightedGraph& g, const CopConfig& cfg) {
  if (!(cfg.delta > 0) || !std::isfinite(cfg.delta)) {
    throw std::invalid_argument("cop decomposition needs a positive finite delta");
  }
  const std::size_t n = g.vertex_count();
  const double lambda = cfg.lambda_radius > 0 ? cfg.lambda_radius : default_radius_lambda(n);
  TexpSampler radius_sampler(lambda, derive_seed(cfg.seed, "radius"));

  VertexSet unclustered = VertexSet::All(n);
  std::vector<NodeId> owner(n, kNoNode);
  std::vector<Supernode> nodes;
  VertexId cursor = 0;

  while (!unclustered.empty()) {
    while (!unclustered.contains(cursor)) ++cursor;
    const VertexId root = cursor;

    // The component of unclustered vertices holding the smallest id.
    VertexSet component(n);
    std::vector<VertexId> stack{root};
    component.insert(root);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (const Arc& a : g.neighbors(u)) {
        if (unclustered.contains(a.to) && !component.contains(a.to)) {
          component.insert(a.to);
          stack.push_back(a.to);
        }
      }
    }
    const std::vector<VertexId> comp = component.to_vector();

    const ShortestPathTree spt = shortest_path_tree(g, root, component);

    // Earlier supernodes touching the component, each with its closest
    // attachment vertex (by distance to the root, then id).
    std::map<NodeId, VertexId> attach;
    for (VertexId u : comp) {
      for (const Arc& a : g.neighbors(u)) {
        const NodeId k = owner[a.to];
        if (k == kNoNode) continue;
        auto [it, fresh] = attach.try_emplace(k, u);
        if (!fresh) {
          const VertexId cur = it->second;
          if (std::pair(spt.dist[u], u) < std::pair(spt.dist[cur], cur)) it->second = u;
        }
      }
    }

    // Pruned skeleton: union of the root paths to the attachment vertices.
    VertexSet on_skeleton(n);
    on_skeleton.insert(root);
    SkeletonTree skeleton;
    skeleton.root = root;
    for (auto [k, leaf] : attach) {
      for (VertexId x = leaf; !on_skeleton.contains(x); x = spt.parent[x]) {
        on_skeleton.insert(x);
        skeleton.edges.emplace_back(spt.parent[x], x);
      }
    }
    std::sort(skeleton.edges.begin(), skeleton.edges.end());

    Supernode node;
    node.id = static_cast<NodeId>(nodes.size());
    node.creation_index = nodes.size();
    // K lies on one root path of the partition tree; its newest member is
    // the deepest.
    node.parent = attach.empty() ? kNoNode : attach.rbegin()->first;
    node.radius = cfg.delta * radius_sampler();
    const VertexSet grown = ball(g, on_skeleton, node.radius, component);
    node.vertices = grown.to_vector();
    node.skeleton = std::move(skeleton);
    for (VertexId v : node.vertices) {
      owner[v] = node.id;
      unclustered.erase(v);
    }
    nodes.push_back(std::move(node));
  }

  return compute_domains_and_bags(PartitionTree(n, std::move(nodes)), g);
}

GammaSearchResult build_with_gamma_search(const WeightedGraph& g, Length target_gamma,
                                          const CopConfig& cfg) {
  if (cfg.max_gamma_retries == 0) {
    throw std::invalid_argument("gamma search needs at least one attempt");
  }
  GammaSearchResult best;
  bool have_best = false;
  for (std::size_t i = 0; i < cfg.max_gamma_retries; ++i) {
    CopConfig attempt = cfg;
    attempt.seed = i == 0 ? cfg.seed : derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    PartitionTree tree = build_cop_decomposition(g, attempt);
    BufferReport report =
        verify_buffered(tree, g, cfg.delta, target_gamma, std::max<std::size_t>(g.vertex_count(), 1));
    const bool met = report.gamma_eff >= target_gamma;
    if (!have_best || report.gamma_eff > best.report.gamma_eff) {
      best.tree = std::move(tree);
      best.report = std::move(report);
      best.seed_used = attempt.seed;
      have_best = true;
    }
    best.attempts = i + 1;
    if (met) {
      best.target_met = true;
      break;
    }
  }
  return best;
}

}  // namespace minordecomp
