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

#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "minordecomp/io.hpp"

namespace minordecomp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

WeightedGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    if (!have_header) {
      if (tok.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      n = parse_number<long long>(tok[0], line_no, "vertex count");
      m = parse_number<long long>(tok[1], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tok.size() != 3) throw ParseError(line_no, "edge line must be 'u v w'");
    if (static_cast<long long>(edges.size()) >= m) {
      throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
    }
    Edge e;
    e.u = parse_number<VertexId>(tok[0], line_no, "vertex id");
    e.v = parse_number<VertexId>(tok[1], line_no, "vertex id");
    e.w = parse_number<double>(tok[2], line_no, "edge weight");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(e.u));
    if (!(e.w >= 0) || !std::isfinite(e.w)) {
      throw ParseError(line_no, "edge weight must be finite and non-negative");
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const StructuralError& e) {
    throw ParseError(0, e.what());
  }
}

WeightedGraph read_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_edge_list(text);
}

std::string format_length(Length w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  if (ec != std::errc()) return std::to_string(w);
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_length(e.w) << '\n';
  }
}

std::string format_edge_list(const WeightedGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace minordecomp
