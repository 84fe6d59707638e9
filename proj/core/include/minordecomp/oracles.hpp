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

// Brute-force reference implementations for tests. Nothing here calls the
// library's shortest-path, ball, cover or sampling code; only the graph and
// vertex-set containers are shared.

#ifndef MINORDECOMP_ORACLES_HPP_
#define MINORDECOMP_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minordecomp/graph.hpp"

namespace minordecomp::oracle {

class OracleRefusal : public std::length_error {
 public:
  using std::length_error::length_error;
};

using Matrix = std::vector<std::vector<Length>>;

struct OracleReport {
  std::string claim;
  bool pass = true;
  std::optional<std::string> witness;  // set iff !pass
  std::string note;
};

// Floyd-Warshall distance matrix of G, or of G[restrict] with +infinity for
// pairs involving excluded vertices.
Matrix apsp_bruteforce(const WeightedGraph& g, std::size_t limit = 512);
Matrix apsp_induced(const WeightedGraph& g, const VertexSet& restrict, std::size_t limit = 512);

// min over sources of the matrix rows; +infinity for an empty source list.
std::vector<Length> distance_to_set(const Matrix& d, const std::vector<VertexId>& sources);

// Checks that every part of `labels` has weak diameter <= big_delta, once per
// gamma; the probability clause is left to the Monte Carlo estimator and
// gamma values above delta_param fail as out of range.
std::vector<OracleReport> check_padded_definition(const WeightedGraph& g,
                                                  const std::vector<std::size_t>& labels,
                                                  double beta, double delta_param,
                                                  Length big_delta,
                                                  const std::vector<double>& gamma_grid,
                                                  std::size_t limit = 512);

// Every cluster weak diameter <= diam_bound and every ball(v, pad_radius)
// inside some cluster, by exhaustive search.
OracleReport check_cover(const WeightedGraph& g, const std::vector<std::vector<VertexId>>& clusters,
                         Length pad_radius, Length diam_bound, std::size_t limit = 512);

// Argmax of delta_C * big_delta / beta + d(v, V \ C) over all clusters, lowest
// index on ties, from the full distance matrix.
std::vector<std::size_t> padded_assignment(const Matrix& d,
                                           const std::vector<std::vector<VertexId>>& clusters,
                                           const std::vector<double>& shifts, Length big_delta,
                                           double beta);

// True iff K_t is a minor of g. Exhaustive over partitions into t connected,
// pairwise adjacent blocks; refuses graphs above `limit` vertices.
bool minor_search(const WeightedGraph& g, std::size_t t, std::size_t limit = 12);

}  // namespace minordecomp::oracle

#endif  // MINORDECOMP_ORACLES_HPP_
