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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pipeline.hpp"

namespace minordecomp::cli {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("minordecomp_cli_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string grid(int rows, int cols) {
  return run({"generate", "--family", "grid", "--rows", std::to_string(rows), "--cols",
              std::to_string(cols)})
      .out;
}

TEST(Cli, GenerateWritesEdgeList) {
  const CliRun r = run({"generate", "--family", "grid", "--rows", "2", "--cols", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "4 4\n");
}

TEST(Cli, PipelineOnGridPasses) {
  const CliRun r = run({"pipeline", "--delta", "2", "--rho", "1", "--seed", "7", "--verify", "full"},
                    grid(6, 6));
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc.at("pass").get<bool>());
  EXPECT_TRUE(doc.at("measured").contains("min_pad_prob") ||
              doc.at("measured").at("padding").contains("min_pad_prob"));
  EXPECT_TRUE(doc.contains("timing"));
}

TEST(Cli, PipelineIsReproducible) {
  const std::string g = grid(5, 5);
  const std::vector<std::string> args{"pipeline", "--delta", "1", "--seed", "3", "--trials", "50"};
  const CliRun a = run(args, g);
  const CliRun b = run(args, g);
  EXPECT_EQ(strip_timing(a.out), strip_timing(b.out));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"pipeline"}, grid(3, 3)).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"generate", "--family", "moebius", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"cover", "--delta", "1", "--rho", "1", "--epsilon", "1"}, grid(2, 2)).code, 2);
  const CliRun parse = run({"pipeline", "--delta", "1"}, "3 1\n0 1 zz\n");
  EXPECT_EQ(parse.code, 3);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"pipeline", "--delta", "1", "--input", temp_path("missing.txt")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CoverOnSingleVertex) {
  const CliRun r = run({"cover", "--delta", "1"}, "1 0\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("clusters").size(), 1u);
  EXPECT_EQ(doc.at("stats").at("s").get<int>(), 1);
}

TEST(Cli, VerifyCorruptedCoverGivesWitnessBall) {
  const std::string g = grid(4, 4);
  const std::string graph_path = temp_path("grid.txt");
  const std::string cover_path = temp_path("cover.json");
  write_file(graph_path, g);
  const CliRun built = run({"cover", "--delta", "1", "--input", graph_path});
  ASSERT_EQ(built.code, 0) << built.err;
  write_file(cover_path, built.out);
  EXPECT_EQ(run({"verify", "--kind", "cover", "--cover", cover_path, "--input", graph_path}).code,
            0);

  json doc = json::parse(built.out);
  for (auto& c : doc.at("clusters")) {
    auto& verts = c.at("vertices");
    verts.erase(std::remove(verts.begin(), verts.end(), json(5)), verts.end());
  }
  doc["clusters"].push_back(doc.at("clusters").at(0));
  doc["clusters"].back()["vertices"] = json::array({5});
  doc["color_classes"].push_back(json::array({doc.at("clusters").size() - 1}));
  write_file(cover_path, doc.dump());
  const CliRun bad =
      run({"verify", "--kind", "cover", "--cover", cover_path, "--input", graph_path});
  EXPECT_EQ(bad.code, 1);
  const json report = json::parse(bad.out).at("report");
  ASSERT_FALSE(report.at("padding_violations").empty());
  EXPECT_TRUE(report.at("padding_violations").at(0).contains("ball"));
  std::remove(graph_path.c_str());
  std::remove(cover_path.c_str());
}

TEST(Cli, DecomposeTreeWithGammaTarget) {
  const std::string g =
      run({"generate", "--family", "tree", "--n", "60", "--tree-shape", "random", "--seed", "2"}).out;
  const std::string report_path = temp_path("buffer.json");
  const CliRun r = run({"decompose", "--delta", "4", "--gamma-target", "1", "--report", report_path}, g);
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(report_path);
  const json report = json::parse(in);
  EXPECT_LE(report.at("max_bag_size").get<int>(), 2);
  std::remove(report_path.c_str());
}

TEST(Cli, VerifyTreeAndSeparate) {
  const std::string g = grid(5, 5);
  const std::string graph_path = temp_path("g5.txt");
  const std::string tree_path = temp_path("tree.json");
  write_file(graph_path, g);
  const CliRun dec = run({"decompose", "--delta", "2", "--input", graph_path});
  ASSERT_EQ(dec.code, 0) << dec.err;
  write_file(tree_path, dec.out);
  EXPECT_EQ(run({"verify", "--kind", "tree", "--tree", tree_path, "--delta", "2", "--input",
                 graph_path})
                .code,
            0);
  EXPECT_EQ(run({"verify", "--kind", "tree", "--tree", tree_path, "--delta", "2", "--w", "1", "--input",
                 graph_path})
                .code,
            1);
  const CliRun sep = run({"separate", "--tree", tree_path, "--input", graph_path});
  EXPECT_EQ(sep.code, 0) << sep.err;
  EXPECT_FALSE(json::parse(sep.out).at("selected").empty());
  write_file(tree_path, "{\"schema_version\": 1,");
  EXPECT_EQ(run({"verify", "--kind", "tree", "--tree", tree_path, "--delta", "2", "--input",
                 graph_path})
                .code,
            3);
  std::remove(graph_path.c_str());
  std::remove(tree_path.c_str());
}

TEST(Cli, PaddedCommand) {
  const CliRun r = run({"padded", "--delta", "1", "--trials", "100", "--seed", "4"}, grid(4, 4));
  EXPECT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("partition").size(), 16u);
  EXPECT_TRUE(doc.at("stats").at("pass").get<bool>());
}

TEST(Cli, BenchCsv) {
  const CliRun r = run({"bench", "--family", "grid", "--sizes", "16,64", "--deltas", "1",
                     "--rhos", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.substr(0, 13), "family,n,m,de");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 2);
}

TEST(Cli, SeedFromEnvironment) {
  const std::string g = grid(4, 4);
  setenv("MINOR_DECOMP_SEED", "12", 1);
  const CliRun env = run({"decompose", "--delta", "1"}, g);
  unsetenv("MINOR_DECOMP_SEED");
  const CliRun flag = run({"decompose", "--delta", "1", "--seed", "12"}, g);
  EXPECT_EQ(env.out, flag.out);
}

TEST(Cli, OracleSubcommand) {
  const CliRun r = run({"oracle", "--claim", "minor", "--t", "4"}, grid(3, 3));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("contains").get<bool>());
}

}  // namespace
}  // namespace minordecomp::cli
