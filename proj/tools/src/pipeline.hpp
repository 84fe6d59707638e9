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

#ifndef MINORDECOMP_TOOLS_PIPELINE_HPP_
#define MINORDECOMP_TOOLS_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minordecomp/graph.hpp"

namespace minordecomp::cli {

enum class VerifyLevel { kOff, kStructural, kFull };

struct PipelineConfig {
  Length delta = 0;
  double rho = 1;
  std::optional<double> beta;   // default: cover padding (4+8rho)/rho
  std::optional<double> gamma;  // default: 1/(8 beta)
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  VerifyLevel verify = VerifyLevel::kFull;
  double radius_lambda = 0;
  std::optional<Length> gamma_target;
  std::size_t gamma_retries = 20;
  bool skip_buffer_check = false;
};

struct PipelineResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::string report;  // JSON, with a "timing" object
};

// decompose -> separators -> cover -> padded, with the verifiers selected by
// cfg.verify. Every random stage draws from derive_seed(cfg.seed, label).
PipelineResult run_pipeline(const WeightedGraph& g, const PipelineConfig& cfg);

// Report with the "timing" member removed; used for reproducibility checks.
std::string strip_timing(std::string_view report);

// Entry point of the minordecomp tool. Exit codes: 0 pass, 1 verification
// failure, 2 usage, 3 I/O or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace minordecomp::cli

#endif  // MINORDECOMP_TOOLS_PIPELINE_HPP_
