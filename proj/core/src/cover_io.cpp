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

#include <algorithm>
#include <string>

#include "json.hpp"
#include "minordecomp/io.hpp"
#include "minordecomp/sparse_cover.hpp"

namespace minordecomp {

using nlohmann::json;

std::string cover_to_json(const Cover& c, Length max_diameter) {
  json clusters = json::array();
  for (const Cluster& k : c.clusters) {
    clusters.push_back({
        {"X", k.x},
        {"Xp", k.xp},
        {"p", k.p},
        {"vertices", k.vertices},
        {"depth", k.recursion_depth},
        {"tree_depth", k.tree_depth},
    });
  }
  json doc = {
      {"schema_version", 1},
      {"vertex_count", c.vertex_count},
      {"params", {{"rho", c.rho}, {"delta", c.delta}}},
      {"clusters", std::move(clusters)},
      {"color_classes", c.color_classes},
      {"stats",
       {{"s", c.s}, {"max_diam", max_diameter}, {"class_count", c.color_classes.size()}}},
  };
  return doc.dump(2) + "\n";
}

Cover cover_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Cover c;
    c.vertex_count = doc.at("vertex_count").get<std::size_t>();
    if (doc.contains("params")) {
      c.rho = doc["params"].value("rho", 1.0);
      c.delta = doc["params"].value("delta", 1.0);
    }
    for (const json& item : doc.at("clusters")) {
      Cluster k;
      k.x = item.value("X", kNoNode);
      k.xp = item.value("Xp", kNoNode);
      k.p = item.value("p", -1);
      k.vertices = item.at("vertices").get<std::vector<VertexId>>();
      k.recursion_depth = item.value("depth", std::size_t{0});
      k.tree_depth = item.value("tree_depth", 0);
      std::sort(k.vertices.begin(), k.vertices.end());
      k.vertices.erase(std::unique(k.vertices.begin(), k.vertices.end()), k.vertices.end());
      for (VertexId v : k.vertices) {
        if (v < 0 || static_cast<std::size_t>(v) >= c.vertex_count) {
          throw ParseError(0, "cover: cluster vertex " + std::to_string(v) + " out of range");
        }
      }
      c.clusters.push_back(std::move(k));
    }
    if (doc.contains("color_classes")) {
      c.color_classes = doc["color_classes"].get<std::vector<std::vector<std::size_t>>>();
    }
    c.s = max_membership(c);
    return c;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("cover: ") + e.what());
  }
}

}  // namespace minordecomp
