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

#ifndef MINORDECOMP_IO_HPP_
#define MINORDECOMP_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minordecomp/graph.hpp"

namespace minordecomp {

// Malformed input. line() is 1-based, or 0 when no line applies (JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format:
//   # comment lines anywhere
//   n m
//   u v w      (m lines, 0-based ids, decimal w)
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const WeightedGraph& g);
std::string format_edge_list(const WeightedGraph& g);

// Shortest round-trip decimal rendering of a length, as used in every
// output format.
std::string format_length(Length w);

}  // namespace minordecomp

#endif  // MINORDECOMP_IO_HPP_
