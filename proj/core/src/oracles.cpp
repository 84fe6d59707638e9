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

#include "minordecomp/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace minordecomp::oracle {

namespace {

void check_limit(std::size_t n, std::size_t limit, const char* who) {
  if (n > limit) {
    throw OracleRefusal(std::string(who) + ": " + std::to_string(n) + " vertices exceeds limit " +
                        std::to_string(limit));
  }
}

Matrix floyd_warshall(const WeightedGraph& g, const VertexSet* restrict) {
  const std::size_t n = g.vertex_count();
  Matrix d(n, std::vector<Length>(n, kInfinity));
  auto in = [&](VertexId v) { return restrict == nullptr || restrict->contains(v); };
  for (std::size_t v = 0; v < n; ++v) {
    if (in(static_cast<VertexId>(v))) d[v][v] = 0;
  }
  for (const Edge& e : g.edges()) {
    if (!in(e.u) || !in(e.v)) continue;
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& dk = d[k];
    for (std::size_t i = 0; i < n; ++i) {
      const Length dik = d[i][k];
      if (dik == kInfinity) continue;
      auto& di = d[i];
      for (std::size_t j = 0; j < n; ++j) {
        const Length cand = dik + dk[j];
        if (cand < di[j]) di[j] = cand;
      }
    }
  }
  return d;
}

}  // namespace

Matrix apsp_bruteforce(const WeightedGraph& g, std::size_t limit) {
  check_limit(g.vertex_count(), limit, "apsp_bruteforce");
  return floyd_warshall(g, nullptr);
}

Matrix apsp_induced(const WeightedGraph& g, const VertexSet& restrict, std::size_t limit) {
  check_limit(g.vertex_count(), limit, "apsp_induced");
  return floyd_warshall(g, &restrict);
}

std::vector<Length> distance_to_set(const Matrix& d, const std::vector<VertexId>& sources) {
  std::vector<Length> out(d.size(), kInfinity);
  for (VertexId s : sources) {
    for (std::size_t v = 0; v < d.size(); ++v) out[v] = std::min(out[v], d[s][v]);
  }
  return out;
}

std::vector<OracleReport> check_padded_definition(const WeightedGraph& g,
                                                  const std::vector<std::size_t>& labels,
                                                  double beta, double delta_param,
                                                  Length big_delta,
                                                  const std::vector<double>& gamma_grid,
                                                  std::size_t limit) {
  const Matrix d = apsp_bruteforce(g, limit);
  std::map<std::size_t, std::vector<VertexId>> parts;
  for (std::size_t v = 0; v < labels.size(); ++v) parts[labels[v]].push_back(static_cast<VertexId>(v));
  std::optional<std::string> bad;
  for (const auto& [label, verts] : parts) {
    for (VertexId u : verts) {
      for (VertexId v : verts) {
        if (!bad && d[u][v] > big_delta) {
          bad = "part " + std::to_string(label) + " has d(" + std::to_string(u) + "," +
                std::to_string(v) + ") = " + std::to_string(d[u][v]);
        }
      }
    }
  }
  std::vector<OracleReport> out;
  for (double gamma : gamma_grid) {
    OracleReport r;
    r.claim = "delta_bounded gamma=" + std::to_string(gamma) + " beta=" + std::to_string(beta);
    r.note = "probability clause is checked by the Monte Carlo estimator";
    if (bad) {
      r.pass = false;
      r.witness = bad;
    } else if (gamma > delta_param) {
      r.pass = false;
      r.witness = "gamma " + std::to_string(gamma) + " above delta " + std::to_string(delta_param);
    }
    out.push_back(std::move(r));
  }
  return out;
}

OracleReport check_cover(const WeightedGraph& g, const std::vector<std::vector<VertexId>>& clusters,
                         Length pad_radius, Length diam_bound, std::size_t limit) {
  const Matrix d = apsp_bruteforce(g, limit);
  const std::size_t n = g.vertex_count();
  OracleReport r;
  r.claim = "sparse cover";
  for (std::size_t i = 0; i < clusters.size() && r.pass; ++i) {
    for (VertexId u : clusters[i]) {
      for (VertexId v : clusters[i]) {
        if (r.pass && d[u][v] > diam_bound) {
          r.pass = false;
          r.witness = "cluster " + std::to_string(i) + " diameter pair (" + std::to_string(u) +
                      "," + std::to_string(v) + ")";
        }
      }
    }
  }
  for (std::size_t v = 0; v < n && r.pass; ++v) {
    bool found = false;
    for (const auto& c : clusters) {
      std::vector<char> in(n, 0);
      for (VertexId u : c) in[u] = 1;
      bool all = true;
      for (std::size_t u = 0; u < n && all; ++u) {
        if (d[v][u] <= pad_radius && !in[u]) all = false;
      }
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.pass = false;
      r.witness = "ball around " + std::to_string(v) + " in no cluster";
    }
  }
  return r;
}

std::vector<std::size_t> padded_assignment(const Matrix& d,
                                           const std::vector<std::vector<VertexId>>& clusters,
                                           const std::vector<double>& shifts, Length big_delta,
                                           double beta) {
  const std::size_t n = d.size();
  std::vector<std::size_t> out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    Length best = -kInfinity;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      std::vector<char> in(n, 0);
      for (VertexId u : clusters[i]) in[u] = 1;
      Length boundary = 0;
      if (in[v]) {
        boundary = kInfinity;
        for (std::size_t u = 0; u < n; ++u) {
          if (!in[u]) boundary = std::min(boundary, d[v][u]);
        }
      }
      const Length f = shifts[i] * big_delta / beta + boundary;
      if (f > best) {
        best = f;
        out[v] = i;
      }
    }
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

struct MinorSearch {
  std::size_t n;
  std::size_t t;
  std::vector<Mask> adj;
  std::vector<Mask> blocks;

  bool connected(Mask m) const {
    if (m == 0) return false;
    Mask seen = m & (~m + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier & (Mask{1} << v)) next |= adj[v];
      }
      next &= m & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == m;
  }

  Mask neighborhood(Mask m) const {
    Mask out = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m & (Mask{1} << v)) out |= adj[v];
    }
    return out;
  }

  bool complete() const {
    for (Mask b : blocks) {
      if (!connected(b)) return false;
    }
    for (std::size_t i = 0; i < t; ++i) {
      const Mask nb = neighborhood(blocks[i]);
      for (std::size_t j = i + 1; j < t; ++j) {
        if ((nb & blocks[j]) == 0) return false;
      }
    }
    return true;
  }

  // Restricted growth strings: vertex v joins an open block or opens the next.
  bool assign(std::size_t v, std::size_t used) {
    if (n - v < t - used) return false;
    if (v == n) return used == t && complete();
    for (std::size_t b = 0; b < used; ++b) {
      blocks[b] |= Mask{1} << v;
      const bool ok = assign(v + 1, used);
      blocks[b] &= ~(Mask{1} << v);
      if (ok) return true;
    }
    if (used < t) {
      blocks[used] |= Mask{1} << v;
      const bool ok = assign(v + 1, used + 1);
      blocks[used] &= ~(Mask{1} << v);
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

bool minor_search(const WeightedGraph& g, std::size_t t, std::size_t limit) {
  check_limit(g.vertex_count(), std::min<std::size_t>(limit, 31), "minor_search");
  const std::size_t n = g.vertex_count();
  if (t == 0) return true;
  if (t > n) return false;
  if (g.edge_count() < t * (t - 1) / 2) return false;

  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  // A clique minor lives inside one component; inside a connected component
  // leftover vertices can always be merged into an adjacent branch set.
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if ((adj[u] & (Mask{1} << v)) && comp[v] < 0) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  for (int c = 0; c < count; ++c) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] == c) verts.push_back(v);
    }
    if (verts.size() < t) continue;
    MinorSearch search{verts.size(), t, std::vector<Mask>(verts.size(), 0),
                       std::vector<Mask>(t, 0)};
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (adj[verts[i]] & (Mask{1} << verts[j])) search.adj[i] |= Mask{1} << j;
      }
    }
    if (search.assign(0, 0)) return true;
  }
  return false;
}

}  // namespace minordecomp::oracle
