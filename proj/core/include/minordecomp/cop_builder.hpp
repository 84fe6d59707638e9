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

// Randomized cop decomposition: supernodes are balls grown around shortest
// path skeletons, one connected component of unclustered vertices at a time.

#ifndef MINORDECOMP_COP_BUILDER_HPP_
#define MINORDECOMP_COP_BUILDER_HPP_

#include <cstddef>
#include <cstdint>

#include "minordecomp/graph.hpp"
#include "minordecomp/partition_tree.hpp"

namespace minordecomp {

struct CopConfig {
  Length delta = 1;
  // Texp parameter for supernode radii. Zero selects 2 + 2 ln n.
  double lambda_radius = 0;
  std::uint64_t seed = 0;
  std::size_t max_gamma_retries = 20;
};

// Returns a partition tree with caches computed. Radii are delta * Texp, so
// every supernode has radius at most delta. Disconnected graphs give one
// root per component.
PartitionTree build_cop_decomposition(const WeightedGraph& g, const CopConfig& cfg);

struct GammaSearchResult {
  PartitionTree tree;
  BufferReport report;
  std::size_t attempts = 0;
  std::uint64_t seed_used = 0;
  bool target_met = false;
};

// Attempt i uses seed cfg.seed for i = 0 and derive_seed(cfg.seed, i)
// afterwards. Stops at the first tree with gamma_eff >= target_gamma;
// otherwise returns the attempt with the largest gamma_eff (earliest wins
// ties) with target_met = false. Requires cfg.max_gamma_retries >= 1.
GammaSearchResult build_with_gamma_search(const WeightedGraph& g, Length target_gamma,
                                          const CopConfig& cfg);

double default_radius_lambda(std::size_t n);

}  // namespace minordecomp

#endif  // MINORDECOMP_COP_BUILDER_HPP_
