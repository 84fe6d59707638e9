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

// Seeded generators for minor-free graph families.

#ifndef MINORDECOMP_GENERATORS_HPP_
#define MINORDECOMP_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minordecomp/graph.hpp"

namespace minordecomp {

enum class Family {
  kGrid,
  kGridWeighted,  // grid with uniform random weights in [1, 2)
  kTree,
  kSeriesParallel,
  kOuterplanar,
  kComplete,
  kExpanderLike,  // union of two random Hamiltonian cycles
};

enum class WeightMode { kUnit, kUniformRandom, kGeometric };
enum class TreeShape { kBinary, kRandom };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  Family family = Family::kGrid;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t n = 0;      // tree, series_parallel, outerplanar, expander_like
  std::size_t m = 0;      // complete
  std::size_t depth = 0;  // series_parallel: alternating composition depth when n == 0
  TreeShape tree_shape = TreeShape::kBinary;
  WeightMode weights = WeightMode::kUnit;
  std::uint64_t seed = 0;
};

// Connected graph, deterministic in the spec. Throws ConfigError on missing
// or unsupported size parameters.
WeightedGraph generate(const FamilySpec& spec);

// Smallest clique the family is guaranteed to exclude as a minor
// (tree 3, series-parallel 4, outerplanar 4, grids 5, K_m gives m+1);
// 0 when the family makes no claim.
std::size_t forbidden_clique(const FamilySpec& spec);

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
WeightMode parse_weight_mode(std::string_view name);

}  // namespace minordecomp

#endif  // MINORDECOMP_GENERATORS_HPP_
