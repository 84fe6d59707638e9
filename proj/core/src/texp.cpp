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

#include "minordecomp/texp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace minordecomp {

double texp_cdf(double lambda, double y) {
  if (y <= 0) return 0;
  if (y >= 1) return 1;
  return std::expm1(-lambda * y) / std::expm1(-lambda);
}

double texp_mean(double lambda) {
  return 1.0 / lambda - std::exp(-lambda) / (-std::expm1(-lambda));
}

double texp_inverse_cdf(double lambda, double u) {
  // 1 - u (1 - e^{-lambda}) computed as log1p(u * expm1(-lambda)).
  const double y = -std::log1p(u * std::expm1(-lambda)) / lambda;
  return std::clamp(y, 0.0, 1.0);
}

TexpSampler::TexpSampler(double lambda, std::uint64_t seed) : lambda_(lambda), rng_(seed) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("Texp lambda must be positive and finite, got " +
                                std::to_string(lambda));
  }
}

}  // namespace minordecomp
