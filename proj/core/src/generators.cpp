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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "minordecomp/rng.hpp"

namespace minordecomp {

namespace {

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

void add(EdgeSet& edges, VertexId u, VertexId v) {
  if (u == v) return;
  edges.emplace(std::min(u, v), std::max(u, v));
}

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(what);
}

EdgeSet grid_edges(std::size_t rows, std::size_t cols) {
  EdgeSet e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) add(e, id(r, c), id(r, c + 1));
      if (r + 1 < rows) add(e, id(r, c), id(r + 1, c));
    }
  }
  return e;
}

EdgeSet tree_edges(std::size_t n, TreeShape shape, Rng& rng) {
  EdgeSet e;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = shape == TreeShape::kBinary ? (i - 1) / 2 : rng.below(i);
    add(e, static_cast<VertexId>(parent), static_cast<VertexId>(i));
  }
  return e;
}

// Grows from a single edge by subdividing an edge or adding a vertex joined
// to both ends of an edge; both keep treewidth at most two.
EdgeSet series_parallel_edges(std::size_t n, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> list{{0, 1}};
  for (VertexId x = 2; static_cast<std::size_t>(x) < n; ++x) {
    const std::size_t pick = rng.below(list.size());
    const auto [u, v] = list[pick];
    if (rng.below(2) == 0) {
      list[pick] = {u, x};
      list.emplace_back(x, v);
    } else {
      list.emplace_back(u, x);
      list.emplace_back(x, v);
    }
  }
  EdgeSet e;
  for (auto [u, v] : list) add(e, u, v);
  return e;
}

// Alternating composition: odd depth is series, even depth is parallel.
VertexId compose(std::size_t depth, VertexId s, VertexId t, VertexId next,
                 std::vector<std::pair<VertexId, VertexId>>& out) {
  if (depth == 0) {
    out.emplace_back(s, t);
    return next;
  }
  if (depth % 2 == 1) {
    const VertexId mid = next++;
    next = compose(depth - 1, s, mid, next, out);
    return compose(depth - 1, mid, t, next, out);
  }
  next = compose(depth - 1, s, t, next, out);
  return compose(depth - 1, s, t, next, out);
}

EdgeSet outerplanar_edges(std::size_t n, Rng& rng) {
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i) {
    add(e, static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  // Random triangulation of the polygon; each chord kept with probability 1/2.
  std::vector<std::pair<VertexId, VertexId>> stack{{0, static_cast<VertexId>(n - 1)}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    const VertexId k = i + 1 + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(j - i - 1)));
    if (k - i >= 2 && rng.below(2) == 0) add(e, i, k);
    if (j - k >= 2 && rng.below(2) == 0) add(e, k, j);
    stack.emplace_back(i, k);
    stack.emplace_back(k, j);
  }
  return e;
}

EdgeSet expander_edges(std::size_t n, Rng& rng) {
  EdgeSet e;
  std::vector<VertexId> perm(n);
  for (int round = 0; round < 2; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i) add(e, perm[i], perm[(i + 1) % n]);
  }
  return e;
}

}  // namespace

WeightedGraph generate(const FamilySpec& spec) {
  Rng structure(derive_seed(spec.seed, "structure"));
  Rng weights(derive_seed(spec.seed, "weights"));
  std::size_t n = 0;
  EdgeSet edges;
  WeightMode mode = spec.weights;

  switch (spec.family) {
    case Family::kGrid:
    case Family::kGridWeighted:
      require(spec.rows > 0 && spec.cols > 0, "grid needs rows and cols");
      n = spec.rows * spec.cols;
      edges = grid_edges(spec.rows, spec.cols);
      if (spec.family == Family::kGridWeighted) mode = WeightMode::kUniformRandom;
      break;
    case Family::kTree:
      require(spec.n > 0, "tree needs n");
      n = spec.n;
      edges = tree_edges(n, spec.tree_shape, structure);
      break;
    case Family::kSeriesParallel:
      if (spec.n > 0) {
        require(spec.n >= 2, "series_parallel needs n >= 2");
        n = spec.n;
        edges = series_parallel_edges(n, structure);
      } else {
        require(spec.depth > 0, "series_parallel needs n or depth");
        require(spec.depth <= 12, "series_parallel depth above 12 is too large");
        std::vector<std::pair<VertexId, VertexId>> list;
        n = static_cast<std::size_t>(compose(spec.depth, 0, 1, 2, list));
        for (auto [u, v] : list) add(edges, u, v);
      }
      break;
    case Family::kOuterplanar:
      require(spec.n >= 3, "outerplanar needs n >= 3");
      n = spec.n;
      edges = outerplanar_edges(n, structure);
      break;
    case Family::kComplete:
      require(spec.m > 0, "complete needs m");
      n = spec.m;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          add(edges, static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
      }
      break;
    case Family::kExpanderLike:
      require(spec.n >= 3, "expander_like needs n >= 3");
      n = spec.n;
      edges = expander_edges(n, structure);
      break;
  }

  std::vector<double> px;
  std::vector<double> py;
  if (mode == WeightMode::kGeometric) {
    for (std::size_t v = 0; v < n; ++v) {
      px.push_back(weights.uniform01());
      py.push_back(weights.uniform01());
    }
  }
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) {
    Length w = 1;
    if (mode == WeightMode::kUniformRandom) {
      w = 1.0 + weights.uniform01();
    } else if (mode == WeightMode::kGeometric) {
      w = std::hypot(px[u] - px[v], py[u] - py[v]);
    }
    list.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(list));
}

std::size_t forbidden_clique(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kGrid:
    case Family::kGridWeighted: return 5;
    case Family::kTree: return 3;
    case Family::kSeriesParallel:
    case Family::kOuterplanar: return 4;
    case Family::kComplete: return spec.m + 1;
    case Family::kExpanderLike: return 0;
  }
  return 0;
}

Family parse_family(std::string_view name) {
  if (name == "grid") return Family::kGrid;
  if (name == "torus-free-grid-weighted" || name == "grid_weighted") return Family::kGridWeighted;
  if (name == "tree") return Family::kTree;
  if (name == "series_parallel") return Family::kSeriesParallel;
  if (name == "outerplanar") return Family::kOuterplanar;
  if (name == "complete") return Family::kComplete;
  if (name == "expander_like") return Family::kExpanderLike;
  throw ConfigError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kGrid: return "grid";
    case Family::kGridWeighted: return "torus-free-grid-weighted";
    case Family::kTree: return "tree";
    case Family::kSeriesParallel: return "series_parallel";
    case Family::kOuterplanar: return "outerplanar";
    case Family::kComplete: return "complete";
    case Family::kExpanderLike: return "expander_like";
  }
  return "unknown";
}

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "unit") return WeightMode::kUnit;
  if (name == "uniform_random" || name == "uniform") return WeightMode::kUniformRandom;
  if (name == "geometric") return WeightMode::kGeometric;
  throw ConfigError("unknown weight mode '" + std::string(name) + "'");
}

}  // namespace minordecomp
