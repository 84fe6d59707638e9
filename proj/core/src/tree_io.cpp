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

#include <string>

#include "json.hpp"
#include "minordecomp/io.hpp"
#include "minordecomp/partition_tree.hpp"

namespace minordecomp {

using nlohmann::json;

std::string tree_to_json(const PartitionTree& tree) {
  json nodes = json::array();
  for (const Supernode& s : tree.supernodes()) {
    json edges = json::array();
    for (auto [u, v] : s.skeleton.edges) edges.push_back({u, v});
    nodes.push_back({
        {"id", s.id},
        {"parent", s.parent == kNoNode ? json(nullptr) : json(s.parent)},
        {"vertices", s.vertices},
        {"skeleton", {{"root", s.skeleton.root}, {"edges", std::move(edges)}}},
        {"radius", s.radius},
    });
  }
  json doc = {
      {"schema_version", 1},
      {"vertex_count", tree.vertex_count()},
      {"supernodes", std::move(nodes)},
  };
  return doc.dump(2) + "\n";
}

PartitionTree tree_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto n = doc.at("vertex_count").get<std::size_t>();
    std::vector<Supernode> nodes;
    std::size_t index = 0;
    for (const json& item : doc.at("supernodes")) {
      Supernode s;
      s.id = item.at("id").get<NodeId>();
      const json& parent = item.at("parent");
      s.parent = parent.is_null() ? kNoNode : parent.get<NodeId>();
      s.vertices = item.at("vertices").get<std::vector<VertexId>>();
      const json& skel = item.at("skeleton");
      s.skeleton.root = skel.at("root").get<VertexId>();
      for (const json& e : skel.at("edges")) {
        s.skeleton.edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
      }
      s.radius = item.value("radius", 0.0);
      s.creation_index = index++;
      nodes.push_back(std::move(s));
    }
    return PartitionTree(n, std::move(nodes));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("partition tree: ") + e.what());
  }
}

}  // namespace minordecomp
