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

#ifndef MINORDECOMP_TEXP_HPP_
#define MINORDECOMP_TEXP_HPP_

#include <cstdint>

#include "minordecomp/rng.hpp"

namespace minordecomp {

// Exponential distribution with rate lambda conditioned on [0,1]:
//   density  g(y) = lambda e^{-lambda y} / (1 - e^{-lambda})
//   cdf      F(y) = (1 - e^{-lambda y}) / (1 - e^{-lambda})
double texp_cdf(double lambda, double y);
double texp_mean(double lambda);
// F^{-1}(u) = -ln(1 - u (1 - e^{-lambda})) / lambda, for u in [0,1].
double texp_inverse_cdf(double lambda, double u);

class TexpSampler {
 public:
  // Throws std::invalid_argument unless lambda > 0 and finite.
  TexpSampler(double lambda, std::uint64_t seed);

  double lambda() const { return lambda_; }
  double operator()() { return texp_inverse_cdf(lambda_, rng_.uniform01()); }

 private:
  double lambda_;
  Rng rng_;
};

}  // namespace minordecomp

#endif  // MINORDECOMP_TEXP_HPP_
