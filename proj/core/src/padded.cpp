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

#include "minordecomp/padded.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "json.hpp"
#include "minordecomp/rng.hpp"
#include "minordecomp/texp.hpp"

namespace minordecomp {

BoundaryDistances boundary_distances(const WeightedGraph& g, const Cover& c) {
  const std::size_t n = g.vertex_count();
  const VertexSet all = VertexSet::All(n);
  BoundaryDistances out;
  out.values.reserve(c.clusters.size());
  for (const Cluster& k : c.clusters) {
    VertexSet outside = VertexSet::All(n);
    for (VertexId v : k.vertices) outside.erase(v);
    out.values.push_back(shortest_paths(g, outside, all));
  }
  return out;
}

double padding_lambda(std::size_t s) {
  return 2.0 + 2.0 * std::log(static_cast<double>(std::max<std::size_t>(s, 1)));
}

namespace {

struct Candidate {
  Length f = -kInfinity;
  std::size_t index = 0;
  bool valid = false;
};

// Strict order: larger potential, then lower index.
bool beats(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.f != b.f) return a.f > b.f;
  return a.index < b.index;
}

}  // namespace

PaddedPartition sample_padded(const WeightedGraph& g, const Cover& c, const BoundaryDistances& bd,
                              double beta, Length delta, std::uint64_t seed) {
  if (!(beta > 0)) throw std::invalid_argument("padded decomposition needs beta > 0");
  const std::size_t n = g.vertex_count();
  const std::size_t k = c.clusters.size();
  PaddedPartition out;
  out.beta = beta;
  out.delta = delta;
  out.lambda = padding_lambda(c.s);
  TexpSampler sampler(out.lambda, seed);
  out.shifts.resize(k);
  for (double& s : out.shifts) s = sampler();
  const Length scale = delta / beta;

  // Clusters by decreasing shift: the best cluster not containing v is the
  // first one in this order that v is missing from.
  std::vector<std::size_t> by_shift(k);
  std::iota(by_shift.begin(), by_shift.end(), 0);
  std::stable_sort(by_shift.begin(), by_shift.end(), [&](std::size_t a, std::size_t b) {
    return out.shifts[a] > out.shifts[b];
  });

  const auto member = memberships(c);
  out.assignment.assign(n, 0);
  out.margin.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& mine = member[v];
    if (mine.empty()) {
      throw StructuralError("vertex " + std::to_string(v) + " is in no cover cluster");
    }
    Candidate best;
    Candidate second;
    auto offer = [&](Candidate cand) {
      if (beats(cand, best)) {
        second = best;
        best = cand;
      } else if (beats(cand, second)) {
        second = cand;
      }
    };
    for (std::size_t i : mine) {
      offer({out.shifts[i] * scale + bd.at(i, static_cast<VertexId>(v)), i, true});
    }
    for (std::size_t i : by_shift) {
      if (!std::binary_search(mine.begin(), mine.end(), i)) {
        offer({out.shifts[i] * scale, i, true});
        break;
      }
    }
    out.assignment[v] = best.index;
    if (!std::binary_search(mine.begin(), mine.end(), best.index)) ++out.membership_violations;
    if (!second.valid) {
      out.margin[v] = kInfinity;
    } else if (best.f == second.f) {
      out.margin[v] = 0;
    } else {
      out.margin[v] = best.f - second.f;
    }
  }
  return out;
}

PaddedPartition sample_padded(const WeightedGraph& g, const Cover& c, double beta, Length delta,
                              std::uint64_t seed) {
  return sample_padded(g, c, boundary_distances(g, c), beta, delta, seed);
}

PartitionCheck check_partition(const WeightedGraph& g, const Cover& c, const PaddedPartition& p) {
  PartitionCheck out;
  std::vector<std::vector<VertexId>> parts(c.clusters.size());
  for (std::size_t v = 0; v < p.assignment.size(); ++v) {
    parts[p.assignment[v]].push_back(static_cast<VertexId>(v));
  }
  DistanceRows rows(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    const auto& verts = c.clusters[i].vertices;
    for (VertexId v : parts[i]) {
      if (!std::binary_search(verts.begin(), verts.end(), v) && out.within_clusters) {
        out.within_clusters = false;
        out.witness = v;
      }
    }
    out.max_diameter = std::max(out.max_diameter, rows.weak_diameter(parts[i]).distance);
  }
  return out;
}

double binomial_lower_bound(std::size_t k, std::size_t n, double confidence) {
  if (k == 0 || n == 0) return 0;
  const double alpha = 1.0 - confidence;
  if (k == n) return std::pow(alpha, 1.0 / static_cast<double>(n));
  return boost::math::ibeta_inv(static_cast<double>(k), static_cast<double>(n - k + 1), alpha);
}

PaddingEstimate estimate_padding(const WeightedGraph& g, const Cover& c, double beta, Length delta,
                                 double gamma, std::size_t trials, std::uint64_t seed,
                                 double confidence) {
  if (trials == 0) throw std::invalid_argument("estimate_padding needs at least one trial");
  const std::size_t n = g.vertex_count();
  PaddingEstimate est;
  est.trials = trials;
  est.beta = beta;
  est.gamma = gamma;
  est.lambda = padding_lambda(c.s);
  est.radius = gamma * delta;
  est.target = std::exp(-4.0 * beta * est.lambda * gamma);

  const BoundaryDistances bd = boundary_distances(g, c);
  const VertexSet all = VertexSet::All(n);
  std::vector<std::vector<VertexId>> balls(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId center = static_cast<VertexId>(v);
    balls[v] = ball(g, std::span<const VertexId>(&center, 1), est.radius, all).to_vector();
  }

  std::vector<std::size_t> hits(n, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const PaddedPartition p = sample_padded(g, c, bd, beta, delta, derive_seed(seed, t));
    est.membership_violations += p.membership_violations;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t home = p.assignment[v];
      const bool together = std::all_of(balls[v].begin(), balls[v].end(),
                                        [&](VertexId u) { return p.assignment[u] == home; });
      if (together) ++hits[v];
      if (p.margin[v] > 2.0 * est.radius) {
        ++est.margin_checked;
        if (!together) ++est.margin_failures;
      }
    }
  }

  est.probability.resize(n);
  std::size_t worst = trials;
  for (std::size_t v = 0; v < n; ++v) {
    est.probability[v] = static_cast<double>(hits[v]) / static_cast<double>(trials);
    if (hits[v] < worst || est.min_vertex < 0) {
      worst = hits[v];
      est.min_vertex = static_cast<VertexId>(v);
    }
  }
  if (n > 0) {
    est.min_probability = static_cast<double>(worst) / static_cast<double>(trials);
    est.lower_bound = binomial_lower_bound(worst, trials, confidence);
  }
  est.pass = est.lower_bound >= est.target;
  return est;
}

std::string padded_to_json(const PaddedPartition& p, const PaddingEstimate* estimate) {
  using nlohmann::json;
  json stats = json::object();
  stats["membership_violations"] = p.membership_violations;
  if (estimate != nullptr) {
    stats["min_pad_prob"] = estimate->min_probability;
    stats["min_pad_vertex"] = estimate->min_vertex;
    stats["lower_bound_99"] = estimate->lower_bound;
    stats["bound"] = estimate->target;
    stats["pass"] = estimate->pass;
    stats["gamma"] = estimate->gamma;
    stats["trials"] = estimate->trials;
    stats["margin_checked"] = estimate->margin_checked;
    stats["margin_failures"] = estimate->margin_failures;
  }
  json doc = {
      {"schema_version", 1},
      {"partition", p.assignment},
      {"shifts", p.shifts},
      {"lambda", p.lambda},
      {"beta", p.beta},
      {"delta", p.delta},
      {"stats", std::move(stats)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace minordecomp
