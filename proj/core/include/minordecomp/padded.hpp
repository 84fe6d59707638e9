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

// Padded decompositions sampled from a sparse cover: every cluster C gets a
// shift delta_C ~ Texp(lambda), and v joins the cluster maximizing
//   f_C(v) = delta_C * Delta / beta + d_G(v, V \ C).

#ifndef MINORDECOMP_PADDED_HPP_
#define MINORDECOMP_PADDED_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "minordecomp/graph.hpp"
#include "minordecomp/sparse_cover.hpp"

namespace minordecomp {

// d_G(v, V \ C) per cluster, computed in the full graph. Zero outside C and
// +infinity on every member when C = V.
struct BoundaryDistances {
  std::vector<DistanceMap> values;
  Length at(std::size_t cluster, VertexId v) const { return values[cluster][v]; }
};
BoundaryDistances boundary_distances(const WeightedGraph& g, const Cover& c);

// 2 + 2 ln(max(s, 1)).
double padding_lambda(std::size_t s);

struct PaddedPartition {
  std::vector<std::size_t> assignment;  // cluster index per vertex
  std::vector<double> shifts;           // delta_C in cluster order
  double lambda = 0;
  double beta = 0;
  Length delta = 0;
  // Winning potential minus the runner-up, per vertex.
  std::vector<Length> margin;
  // Vertices whose argmax landed on a cluster not containing them. Zero
  // whenever the cover pads with radius Delta/beta.
  std::size_t membership_violations = 0;
};

// Draws one shift per cluster in cluster order from Texp(padding_lambda(s))
// seeded with `seed`, then assigns every vertex to its argmax (lowest index
// on ties). Throws StructuralError for a vertex in no cluster.
PaddedPartition sample_padded(const WeightedGraph& g, const Cover& c, const BoundaryDistances& bd,
                              double beta, Length delta, std::uint64_t seed);
PaddedPartition sample_padded(const WeightedGraph& g, const Cover& c, double beta, Length delta,
                              std::uint64_t seed);

// Largest weak diameter over the nonempty parts and whether every part lies
// inside its cover cluster.
struct PartitionCheck {
  Length max_diameter = 0;
  bool within_clusters = true;
  VertexId witness = -1;
};
PartitionCheck check_partition(const WeightedGraph& g, const Cover& c, const PaddedPartition& p);

// One-sided Clopper-Pearson lower bound for k successes out of n.
double binomial_lower_bound(std::size_t k, std::size_t n, double confidence);

struct PaddingEstimate {
  std::vector<double> probability;  // per vertex
  double min_probability = 1;
  VertexId min_vertex = -1;
  double lower_bound = 1;  // confidence bound at the worst vertex
  double target = 0;       // e^{-4 beta lambda gamma}
  bool pass = false;
  std::size_t trials = 0;
  double lambda = 0;
  double beta = 0;
  double gamma = 0;
  Length radius = 0;  // gamma * Delta
  // Margin check: margin > 2 * radius must imply the ball stays together.
  std::size_t margin_checked = 0;
  std::size_t margin_failures = 0;
  std::size_t membership_violations = 0;
};

// `trials` independent partitions, trial i seeded with derive_seed(seed, i).
PaddingEstimate estimate_padding(const WeightedGraph& g, const Cover& c, double beta, Length delta,
                                 double gamma, std::size_t trials, std::uint64_t seed,
                                 double confidence = 0.99);

// {"schema_version":1, "partition":[..], "shifts":[..], "lambda", "beta",
//  "delta", "stats":{...}}
std::string padded_to_json(const PaddedPartition& p, const PaddingEstimate* estimate);

}  // namespace minordecomp

#endif  // MINORDECOMP_PADDED_HPP_
