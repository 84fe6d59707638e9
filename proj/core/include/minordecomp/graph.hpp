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

#ifndef MINORDECOMP_GRAPH_HPP_
#define MINORDECOMP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minordecomp {

using VertexId = std::int32_t;
using NodeId = std::int32_t;
using Length = double;

inline constexpr Length kInfinity = std::numeric_limits<Length>::infinity();
inline constexpr NodeId kNoNode = -1;

// Raised when an input object violates a structural precondition (bad edge,
// non-partition, cycle in parent links, ...). The message names the culprit.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Length w = 0;
};

struct Arc {
  VertexId to = 0;
  Length w = 0;
};

// Immutable undirected graph with nonnegative finite edge lengths.
// Adjacency is stored in CSR form; neighbors are sorted by vertex id.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws StructuralError on self-loops, duplicate pairs, out-of-range ids,
  // or negative / non-finite weights.
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Arc> neighbors(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Weight of edge {u,v}, or nullopt if absent.
  std::optional<Length> edge_weight(VertexId u, VertexId v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;  // u < v, sorted
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

// Membership mask over 0..universe-1 with O(1) contains().
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : mask_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const VertexId> members);
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe, std::span<const VertexId>(members.begin(), members.size())) {}

  static VertexSet All(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < mask_.size() && mask_[v] != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  // Members in increasing id order.
  std::vector<VertexId> to_vector() const;

  bool is_subset_of(const VertexSet& other) const;
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.mask_ == b.mask_;
  }

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t size_ = 0;
};

// Per-vertex distance; +infinity for unreachable or excluded vertices.
using DistanceMap = std::vector<Length>;

struct ShortestPathTree {
  DistanceMap dist;
  std::vector<VertexId> parent;  // -1 for sources and unreachable vertices
};

// Multi-source Dijkstra inside G[restrict]. Sources outside restrict are
// ignored. An empty source set yields an all-infinity map.
DistanceMap shortest_paths(const WeightedGraph& g, const VertexSet& sources,
                           const VertexSet& restrict);
DistanceMap shortest_paths(const WeightedGraph& g, std::span<const VertexId> sources,
                           const VertexSet& restrict, Length cutoff = kInfinity);
// Unrestricted single-source distances in the full graph.
DistanceMap shortest_paths(const WeightedGraph& g, VertexId source);

// Single-source tree inside G[restrict]. Parent choice is deterministic:
// among equal-length predecessors the one settled first wins.
ShortestPathTree shortest_path_tree(const WeightedGraph& g, VertexId root,
                                    const VertexSet& restrict);

// Closed ball {u in restrict : d_{G[restrict]}(u, centers) <= radius}.
VertexSet ball(const WeightedGraph& g, const VertexSet& centers, Length radius,
               const VertexSet& restrict);
VertexSet ball(const WeightedGraph& g, std::span<const VertexId> centers, Length radius,
               const VertexSet& restrict);

// Maximum full-graph distance between members. Requires a nonempty cluster.
Length weak_diameter(const WeightedGraph& g, const VertexSet& cluster);

// Components of G[restrict], ordered by their smallest vertex id.
std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& restrict);

// Lazily computed rows of the full-graph distance matrix. Not thread-safe.
class DistanceRows {
 public:
  explicit DistanceRows(const WeightedGraph& g) : g_(&g), rows_(g.vertex_count()) {}
  const DistanceMap& row(VertexId source);
  Length distance(VertexId u, VertexId v) { return row(u)[v]; }

  struct Farthest {
    Length distance = 0;
    VertexId u = -1;
    VertexId v = -1;
  };
  // Weak diameter of `members` together with a witness pair.
  Farthest weak_diameter(std::span<const VertexId> members);

 private:
  const WeightedGraph* g_;
  std::vector<std::optional<DistanceMap>> rows_;
};

}  // namespace minordecomp

#endif  // MINORDECOMP_GRAPH_HPP_
