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

#include "minordecomp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace minordecomp {

namespace {

using HeapEntry = std::pair<Length, VertexId>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

void check_vertex(const WeightedGraph& g, VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw StructuralError("vertex id " + std::to_string(v) + " out of range");
  }
}

// Core Dijkstra loop shared by all distance queries. `parent` may be null.
void run_dijkstra(const WeightedGraph& g, const VertexSet* restrict, Length cutoff,
                  MinHeap& heap, DistanceMap& dist, std::vector<VertexId>* parent) {
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Arc& a : g.neighbors(u)) {
      if (restrict != nullptr && !restrict->contains(a.to)) continue;
      const Length nd = d + a.w;
      if (nd > cutoff) continue;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        if (parent != nullptr) (*parent)[a.to] = u;
        heap.emplace(nd, a.to);
      }
    }
  }
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= vertex_count ||
        static_cast<std::size_t>(e.v) >= vertex_count) {
      throw StructuralError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." +
                            std::to_string(static_cast<long long>(vertex_count) - 1));
    }
    if (e.u == e.v) {
      throw StructuralError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.w >= 0) || !std::isfinite(e.w)) {
      throw StructuralError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has invalid weight " + std::to_string(e.w));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw StructuralError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                            std::to_string(edges[i].v) + ")");
    }
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  arcs_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    arcs_[fill[e.u]++] = Arc{e.v, e.w};
    arcs_[fill[e.v]++] = Arc{e.u, e.w};
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(arcs_.begin() + offsets_[v], arcs_.begin() + offsets_[v + 1],
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

std::optional<Length> WeightedGraph::edge_weight(VertexId u, VertexId v) const {
  if (u < 0 || static_cast<std::size_t>(u) >= vertex_count_) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const Arc& a, VertexId x) { return a.to < x; });
  if (it == nb.end() || it->to != v) return std::nullopt;
  return it->w;
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : mask_(universe, 0) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::All(std::size_t universe) {
  VertexSet s;
  s.mask_.assign(universe, 1);
  s.size_ = universe;
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= mask_.size()) {
    throw StructuralError("vertex id " + std::to_string(v) + " outside set universe");
  }
  if (mask_[v] == 0) {
    mask_[v] = 1;
    ++size_;
  }
}

void VertexSet::erase(VertexId v) {
  if (contains(v)) {
    mask_[v] = 0;
    --size_;
  }
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::size_t v = 0; v < mask_.size(); ++v) {
    if (mask_[v] != 0) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t v = 0; v < mask_.size(); ++v) {
    if (mask_[v] != 0 && !other.contains(static_cast<VertexId>(v))) return false;
  }
  return true;
}

DistanceMap shortest_paths(const WeightedGraph& g, std::span<const VertexId> sources,
                           const VertexSet& restrict, Length cutoff) {
  DistanceMap dist(g.vertex_count(), kInfinity);
  MinHeap heap;
  for (VertexId s : sources) {
    check_vertex(g, s);
    if (!restrict.contains(s) || dist[s] == 0) continue;
    dist[s] = 0;
    heap.emplace(0.0, s);
  }
  run_dijkstra(g, &restrict, cutoff, heap, dist, nullptr);
  return dist;
}

DistanceMap shortest_paths(const WeightedGraph& g, const VertexSet& sources,
                           const VertexSet& restrict) {
  const auto list = sources.to_vector();
  return shortest_paths(g, std::span<const VertexId>(list), restrict);
}

DistanceMap shortest_paths(const WeightedGraph& g, VertexId source) {
  check_vertex(g, source);
  DistanceMap dist(g.vertex_count(), kInfinity);
  MinHeap heap;
  dist[source] = 0;
  heap.emplace(0.0, source);
  run_dijkstra(g, nullptr, kInfinity, heap, dist, nullptr);
  return dist;
}

ShortestPathTree shortest_path_tree(const WeightedGraph& g, VertexId root,
                                    const VertexSet& restrict) {
  check_vertex(g, root);
  ShortestPathTree t;
  t.dist.assign(g.vertex_count(), kInfinity);
  t.parent.assign(g.vertex_count(), -1);
  if (!restrict.contains(root)) return t;
  MinHeap heap;
  t.dist[root] = 0;
  heap.emplace(0.0, root);
  run_dijkstra(g, &restrict, kInfinity, heap, t.dist, &t.parent);
  return t;
}

VertexSet ball(const WeightedGraph& g, std::span<const VertexId> centers, Length radius,
               const VertexSet& restrict) {
  const DistanceMap dist = shortest_paths(g, centers, restrict, radius);
  VertexSet out(g.vertex_count());
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] <= radius) out.insert(static_cast<VertexId>(v));
  }
  return out;
}

VertexSet ball(const WeightedGraph& g, const VertexSet& centers, Length radius,
               const VertexSet& restrict) {
  const auto list = centers.to_vector();
  return ball(g, std::span<const VertexId>(list), radius, restrict);
}

Length weak_diameter(const WeightedGraph& g, const VertexSet& cluster) {
  if (cluster.empty()) throw StructuralError("weak_diameter of an empty cluster");
  const auto members = cluster.to_vector();
  DistanceRows rows(g);
  return rows.weak_diameter(members).distance;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& restrict) {
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto sv = static_cast<VertexId>(s);
    if (!restrict.contains(sv) || seen[s]) continue;
    VertexSet comp(g.vertex_count());
    seen[s] = 1;
    stack.push_back(sv);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (const Arc& a : g.neighbors(u)) {
        if (restrict.contains(a.to) && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

const DistanceMap& DistanceRows::row(VertexId source) {
  auto& slot = rows_.at(static_cast<std::size_t>(source));
  if (!slot) slot = shortest_paths(*g_, source);
  return *slot;
}

DistanceRows::Farthest DistanceRows::weak_diameter(std::span<const VertexId> members) {
  Farthest best;
  if (members.empty()) return best;
  best.u = best.v = members.front();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const DistanceMap& r = row(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (r[members[j]] > best.distance) {
        best = {r[members[j]], members[i], members[j]};
      }
    }
  }
  return best;
}

}  // namespace minordecomp
