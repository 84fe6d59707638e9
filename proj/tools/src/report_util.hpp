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

#ifndef MINORDECOMP_TOOLS_REPORT_UTIL_HPP_
#define MINORDECOMP_TOOLS_REPORT_UTIL_HPP_

#include <cmath>

#include "json.hpp"
#include "minordecomp/graph.hpp"

namespace minordecomp::cli {

// JSON has no infinity: unbounded lengths are written as the string "inf",
// unmeasured ones as null.
inline nlohmann::json length_json(Length x, bool measured = true) {
  if (!measured) return nullptr;
  if (std::isinf(x)) return "inf";
  return x;
}

}  // namespace minordecomp::cli

#endif  // MINORDECOMP_TOOLS_REPORT_UTIL_HPP_
