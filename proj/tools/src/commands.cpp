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

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "minordecomp/cop_builder.hpp"
#include "minordecomp/generators.hpp"
#include "minordecomp/io.hpp"
#include "minordecomp/oracles.hpp"
#include "minordecomp/padded.hpp"
#include "minordecomp/partition_tree.hpp"
#include "minordecomp/rng.hpp"
#include "minordecomp/separator.hpp"
#include "minordecomp/sparse_cover.hpp"
#include "pipeline.hpp"
#include "report_util.hpp"

namespace minordecomp::cli {

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

WeightedGraph load_graph(const std::string& path, std::istream& in) {
  return parse_edge_list(read_text(path, in));
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MINOR_DECOMP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MINOR_DECOMP_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

double resolve_rho(const std::optional<double>& rho, const std::optional<double>& epsilon) {
  if (epsilon) {
    if (!(*epsilon > 0)) throw UsageError("--epsilon must be positive");
    return 4.0 / *epsilon;
  }
  const double r = rho.value_or(1.0);
  if (!(r >= 1)) throw UsageError("--rho must be at least 1");
  return r;
}

void require_delta(Length delta) {
  if (!(delta > 0) || !std::isfinite(delta)) throw UsageError("--delta must be positive");
}

VerifyLevel parse_level(const std::string& s) {
  if (s == "off") return VerifyLevel::kOff;
  if (s == "structural") return VerifyLevel::kStructural;
  if (s == "full") return VerifyLevel::kFull;
  throw UsageError("unknown verification level '" + s + "'");
}

json buffer_report_json(const BufferReport& r, std::size_t limit = 20) {
  json violations = json::array();
  for (const BufferViolation& v : r.violations) {
    if (violations.size() >= limit) break;
    violations.push_back({{"kind", std::string(to_string(v.kind))},
                          {"node", v.node},
                          {"ancestor", v.ancestor},
                          {"witness", v.witness},
                          {"value", length_json(v.value)},
                          {"detail", v.detail}});
  }
  return {{"max_radius", r.max_radius},
          {"max_bag_size", r.max_bag_size},
          {"max_skeleton_leaves", r.max_skeleton_leaves},
          {"gamma_eff", length_json(r.gamma_eff, r.buffer_checked)},
          {"violation_count", r.violations.size()},
          {"violations", std::move(violations)},
          {"pass", r.ok()}};
}

struct CommonGraphInput {
  std::string input = "-";
  std::string output = "-";
};

void add_io(CLI::App* cmd, CommonGraphInput& io) {
  cmd->add_option("--input,-i", io.input, "Edge-list file ('-' for stdin)");
  cmd->add_option("--output,-o", io.output, "Output file ('-' for stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Cop decompositions, sparse covers and padded decompositions of weighted graphs",
               "minordecomp"};
  app.require_subcommand(1);
  std::function<int()> action;

  // generate
  FamilySpec gen;
  std::string gen_family = "grid";
  std::string gen_weights = "unit";
  std::string gen_shape = "binary";
  std::optional<std::uint64_t> gen_seed;
  std::string gen_output = "-";
  auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  gen_cmd->add_option("--family", gen_family,
                       "grid | torus-free-grid-weighted | tree | series_parallel | outerplanar | "
                       "complete | expander_like");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--rows", gen.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen.cols, "Grid columns");
  gen_cmd->add_option("--m", gen.m, "Clique size for complete");
  gen_cmd->add_option("--depth", gen.depth, "Composition depth for series_parallel");
  gen_cmd->add_option("--tree-shape", gen_shape, "binary | random");
  gen_cmd->add_option("--weights", gen_weights, "unit | uniform_random | geometric");
  gen_cmd->add_option("--seed", gen_seed, "Seed");
  gen_cmd->add_option("--output,-o", gen_output, "Output file");
  gen_cmd->callback([&] {
    action = [&] {
      gen.family = parse_family(gen_family);
      gen.weights = parse_weight_mode(gen_weights);
      if (gen_shape == "binary") {
        gen.tree_shape = TreeShape::kBinary;
      } else if (gen_shape == "random") {
        gen.tree_shape = TreeShape::kRandom;
      } else {
        throw UsageError("unknown tree shape '" + gen_shape + "'");
      }
      gen.seed = resolve_seed(gen_seed);
      emit(gen_output, format_edge_list(generate(gen)), io.out);
      return kExitPass;
    };
  });

  // decompose
  CommonGraphInput dec_io;
  Length dec_delta = 0;
  std::optional<std::uint64_t> dec_seed;
  double dec_lambda = 0;
  std::optional<Length> dec_target;
  std::size_t dec_retries = 20;
  std::string dec_report;
  bool dec_skip = false;
  auto* decompose = app.add_subcommand("decompose", "Build a cop-decomposition partition tree");
  add_io(decompose, dec_io);
  decompose->add_option("--delta", dec_delta, "Supernode radius bound")->required();
  decompose->add_option("--seed", dec_seed, "Seed");
  decompose->add_option("--radius-lambda", dec_lambda, "Texp parameter for radii (0: 2+2 ln n)");
  decompose->add_option("--gamma-target", dec_target, "Retry until the buffer reaches this value");
  decompose->add_option("--gamma-retries", dec_retries, "Maximum attempts for --gamma-target");
  decompose->add_option("--report", dec_report, "Write the buffer report JSON here");
  decompose->add_flag("--skip-buffer-check", dec_skip, "Do not measure the buffer");
  decompose->callback([&] {
    action = [&] {
      require_delta(dec_delta);
      const WeightedGraph g = load_graph(dec_io.input, io.in);
      CopConfig cfg;
      cfg.delta = dec_delta;
      cfg.seed = resolve_seed(dec_seed);
      cfg.lambda_radius = dec_lambda;
      cfg.max_gamma_retries = std::max<std::size_t>(dec_retries, 1);
      PartitionTree tree;
      BufferReport report;
      json extra = json::object();
      if (dec_target) {
        GammaSearchResult r = build_with_gamma_search(g, *dec_target, cfg);
        tree = std::move(r.tree);
        report = std::move(r.report);
        const std::size_t attempts = r.attempts;
        extra = {{"gamma_target", *dec_target},
                 {"attempts", attempts},
                 {"target_met", r.target_met},
                 {"seed_used", r.seed_used}};
        io.err << (r.target_met ? "gamma target met" : "gamma target not met") << " after "
               << attempts << " attempt(s), gamma_eff=" << report.gamma_eff << "\n";
      } else {
        tree = build_cop_decomposition(g, cfg);
        BufferCheckOptions opts;
        opts.skip_buffer = dec_skip;
        report = verify_buffered(tree, g, dec_delta, 0, std::max<std::size_t>(g.vertex_count(), 1),
                                 opts);
      }
      emit(dec_io.output, tree_to_json(tree), io.out);
      if (!dec_report.empty()) {
        json doc = buffer_report_json(report);
        doc["schema_version"] = 1;
        doc["search"] = std::move(extra);
        emit(dec_report, doc.dump(2) + "\n", io.out);
      }
      return kExitPass;
    };
  });

  // separate
  CommonGraphInput sep_io;
  std::string sep_tree;
  std::optional<NodeId> sep_root;
  auto* separate = app.add_subcommand("separate", "Select separator supernodes of a subtree");
  add_io(separate, sep_io);
  separate->add_option("--tree", sep_tree, "Partition-tree JSON")->required();
  separate->add_option("--root", sep_root, "Subtree root (default: first tree root)");
  separate->callback([&] {
    action = [&] {
      const WeightedGraph g = load_graph(sep_io.input, io.in);
      const PartitionTree tree =
          compute_domains_and_bags(tree_from_json(read_text(sep_tree, io.in)), g);
      if (tree.roots().empty()) throw UsageError("partition tree is empty");
      const NodeId root = sep_root.value_or(tree.roots().front());
      if (root < 0 || static_cast<std::size_t>(root) >= tree.size()) {
        throw UsageError("--root out of range");
      }
      const SubtreeView view = SubtreeView::Below(tree, root);
      emit(sep_io.output, separator_to_json(view, separator_supernodes(view)), io.out);
      return kExitPass;
    };
  });

  // cover
  CommonGraphInput cov_io;
  Length cov_delta = 0;
  std::optional<double> cov_rho;
  std::optional<double> cov_eps;
  std::optional<std::uint64_t> cov_seed;
  double cov_lambda = 0;
  std::string cov_tree;
  auto* cover_cmd = app.add_subcommand("cover", "Build a sparse partition cover");
  add_io(cover_cmd, cov_io);
  cover_cmd->add_option("--delta", cov_delta, "Decomposition radius")->required();
  auto* rho_opt = cover_cmd->add_option("--rho", cov_rho, "Padding radius factor (>= 1)");
  cover_cmd->add_option("--epsilon", cov_eps, "Sets rho = 4/epsilon")->excludes(rho_opt);
  cover_cmd->add_option("--seed", cov_seed, "Seed");
  cover_cmd->add_option("--radius-lambda", cov_lambda, "Texp parameter for radii");
  cover_cmd->add_option("--tree", cov_tree, "Use this partition tree instead of building one");
  cover_cmd->callback([&] {
    action = [&] {
      require_delta(cov_delta);
      const double rho = resolve_rho(cov_rho, cov_eps);
      const WeightedGraph g = load_graph(cov_io.input, io.in);
      PartitionTree tree;
      if (!cov_tree.empty()) {
        tree = compute_domains_and_bags(tree_from_json(read_text(cov_tree, io.in)), g);
      } else {
        CopConfig cfg;
        cfg.delta = cov_delta;
        cfg.seed = derive_seed(resolve_seed(cov_seed), "cop");
        cfg.lambda_radius = cov_lambda;
        tree = build_cop_decomposition(g, cfg);
      }
      const Cover c = build_cover(g, tree, rho, cov_delta);
      Length max_diam = 0;
      DistanceRows rows(g);
      for (const Cluster& k : c.clusters) {
        max_diam = std::max(max_diam, rows.weak_diameter(k.vertices).distance);
      }
      emit(cov_io.output, cover_to_json(c, max_diam), io.out);
      return kExitPass;
    };
  });

  // padded
  CommonGraphInput pad_io;
  std::string pad_cover;
  Length pad_delta = 0;
  std::optional<double> pad_rho;
  std::optional<double> pad_eps;
  std::optional<double> pad_beta;
  std::optional<double> pad_gamma;
  std::size_t pad_trials = 1000;
  std::optional<std::uint64_t> pad_seed;
  auto* padded = app.add_subcommand("padded", "Sample a padded decomposition from a cover");
  add_io(padded, pad_io);
  padded->add_option("--cover", pad_cover, "Cover JSON (default: build one from --delta/--rho)");
  padded->add_option("--delta", pad_delta, "Decomposition radius of the cover");
  auto* prho = padded->add_option("--rho", pad_rho, "Padding radius factor");
  padded->add_option("--epsilon", pad_eps, "Sets rho = 4/epsilon")->excludes(prho);
  padded->add_option("--beta", pad_beta, "Cover padding (default: inferred from the cover)");
  padded->add_option("--gamma", pad_gamma, "Ball radius factor (default 1/(8 beta))");
  padded->add_option("--trials", pad_trials, "Monte Carlo trials (0: sample only)");
  padded->add_option("--seed", pad_seed, "Seed");
  padded->callback([&] {
    action = [&] {
      const WeightedGraph g = load_graph(pad_io.input, io.in);
      const std::uint64_t seed = resolve_seed(pad_seed);
      Cover c;
      if (!pad_cover.empty()) {
        c = cover_from_json(read_text(pad_cover, io.in));
        if (c.vertex_count != g.vertex_count()) throw UsageError("cover does not match the graph");
        if (pad_delta > 0) c.delta = pad_delta;
        if (pad_rho || pad_eps) c.rho = resolve_rho(pad_rho, pad_eps);
      } else {
        require_delta(pad_delta);
        CopConfig cfg;
        cfg.delta = pad_delta;
        cfg.seed = derive_seed(seed, "cop");
        const PartitionTree tree = build_cop_decomposition(g, cfg);
        c = build_cover(g, tree, resolve_rho(pad_rho, pad_eps), pad_delta);
      }
      const Length big_delta = (4.0 + 8.0 * c.rho) * c.delta;
      const double beta = pad_beta.value_or(big_delta / (c.rho * c.delta));
      const double gamma = pad_gamma.value_or(1.0 / (8.0 * beta));
      const std::uint64_t pseed = derive_seed(seed, "padded");
      const PaddedPartition p = sample_padded(g, c, beta, big_delta, derive_seed(pseed, 0));
      bool ok = p.membership_violations == 0;
      std::optional<PaddingEstimate> est;
      if (pad_trials > 0) {
        est = estimate_padding(g, c, beta, big_delta, gamma, pad_trials, pseed);
        ok = ok && est->pass && est->margin_failures == 0;
      }
      emit(pad_io.output, padded_to_json(p, est ? &*est : nullptr), io.out);
      return ok ? kExitPass : kExitFail;
    };
  });

  // verify
  CommonGraphInput ver_io;
  std::string ver_kind;
  std::string ver_tree;
  std::string ver_cover;
  std::string ver_padded;
  std::optional<Length> ver_delta;
  Length ver_gamma = 0;
  std::optional<std::size_t> ver_w;
  std::optional<double> ver_rho;
  std::optional<Length> ver_pad_radius;
  std::optional<Length> ver_diam;
  bool ver_skip = false;
  auto* verify = app.add_subcommand("verify", "Check a tree, cover or partition exactly");
  add_io(verify, ver_io);
  verify->add_option("--kind", ver_kind, "tree | cover | padded")
      ->required()
      ->check(CLI::IsMember({"tree", "cover", "padded"}));
  verify->add_option("--tree", ver_tree, "Partition-tree JSON");
  verify->add_option("--cover", ver_cover, "Cover JSON");
  verify->add_option("--padded", ver_padded, "Padded-partition JSON");
  verify->add_option("--delta", ver_delta, "Radius (tree) or cover delta / partition bound");
  verify->add_option("--gamma", ver_gamma, "Required buffer for --kind tree");
  verify->add_option("--w", ver_w, "Bag and leaf parameter for --kind tree (default n)");
  verify->add_option("--rho", ver_rho, "Cover rho (default: from the cover file)");
  verify->add_option("--pad-radius", ver_pad_radius, "Override the padding radius");
  verify->add_option("--diam-bound", ver_diam, "Override the diameter bound");
  verify->add_flag("--skip-buffer-check", ver_skip, "Do not measure the buffer");
  verify->callback([&] {
    action = [&]() -> int {
      const WeightedGraph g = load_graph(ver_io.input, io.in);
      const std::size_t n = g.vertex_count();
      json doc = {{"schema_version", 1}, {"kind", ver_kind}};
      bool ok = true;
      if (ver_kind == "tree") {
        if (ver_tree.empty()) throw UsageError("--kind tree needs --tree");
        if (!ver_delta) throw UsageError("--kind tree needs --delta");
        PartitionTree raw = tree_from_json(read_text(ver_tree, io.in));
        try {
          const PartitionTree tree = compute_domains_and_bags(std::move(raw), g);
          BufferCheckOptions opts;
          opts.skip_buffer = ver_skip;
          const BufferReport r = verify_buffered(tree, g, *ver_delta, ver_gamma,
                                                 ver_w.value_or(std::max<std::size_t>(n, 1)), opts);
          doc["report"] = buffer_report_json(r);
          ok = r.ok();
        } catch (const StructuralError& e) {
          doc["report"] = {{"pass", false}, {"structural_error", e.what()}};
          ok = false;
        }
      } else if (ver_kind == "cover") {
        if (ver_cover.empty()) throw UsageError("--kind cover needs --cover");
        const Cover c = cover_from_json(read_text(ver_cover, io.in));
        if (c.vertex_count != n) throw UsageError("cover does not match the graph");
        const double rho = ver_rho.value_or(c.rho);
        const Length delta = ver_delta.value_or(c.delta);
        const Length pad = ver_pad_radius.value_or(rho * delta);
        const Length diam = ver_diam.value_or((4.0 + 8.0 * rho) * delta);
        const VertexSet all = VertexSet::All(n);
        const CoverReport r = verify_cover(c, g, all, pad, diam);
        json pads = json::array();
        for (const auto& v : r.padding_violations) {
          if (pads.size() >= 20) break;
          pads.push_back({{"center", v.center},
                          {"ball", ball(g, std::span<const VertexId>(&v.center, 1), pad, all)
                                       .to_vector()}});
        }
        json diams = json::array();
        for (const auto& v : r.diameter_violations) {
          if (diams.size() >= 20) break;
          diams.push_back({{"cluster", v.cluster}, {"u", v.u}, {"v", v.v}, {"distance", v.distance}});
        }
        json colors = json::array();
        for (const auto& v : r.color_violations) {
          if (colors.size() >= 20) break;
          colors.push_back(
              {{"class", v.color}, {"first", v.first}, {"second", v.second}, {"vertex", v.shared}});
        }
        doc["report"] = {{"pad_radius", pad},
                         {"diam_bound", diam},
                         {"max_diam", r.max_diameter},
                         {"s", r.s},
                         {"class_count", r.class_count},
                         {"balls_checked", r.balls_checked},
                         {"padding_violations", std::move(pads)},
                         {"diameter_violations", std::move(diams)},
                         {"color_violations", std::move(colors)},
                         {"class_problem", r.class_problem},
                         {"pass", r.ok()}};
        ok = r.ok();
      } else {
        if (ver_padded.empty()) throw UsageError("--kind padded needs --padded");
        json p;
        try {
          p = json::parse(read_text(ver_padded, io.in));
        } catch (const json::exception& e) {
          throw ParseError(0, std::string("padded partition: ") + e.what());
        }
        std::vector<std::size_t> labels;
        try {
          labels = p.at("partition").get<std::vector<std::size_t>>();
        } catch (const json::exception& e) {
          throw ParseError(0, std::string("padded partition: ") + e.what());
        }
        if (labels.size() != n) throw UsageError("partition does not match the graph");
        Length bound = ver_delta.value_or(p.value("delta", 0.0));
        std::map<std::size_t, std::vector<VertexId>> parts;
        for (std::size_t v = 0; v < n; ++v) parts[labels[v]].push_back(static_cast<VertexId>(v));
        DistanceRows rows(g);
        Length worst = 0;
        json witness = nullptr;
        for (const auto& [label, verts] : parts) {
          const auto far = rows.weak_diameter(verts);
          if (far.distance > worst) worst = far.distance;
          if (far.distance > bound && witness.is_null()) {
            witness = {{"part", label}, {"u", far.u}, {"v", far.v},
                       {"distance", length_json(far.distance)}};
          }
        }
        ok = witness.is_null();
        bool within = true;
        if (!ver_cover.empty()) {
          const Cover c = cover_from_json(read_text(ver_cover, io.in));
          for (std::size_t v = 0; v < n; ++v) {
            if (labels[v] >= c.clusters.size() ||
                !std::binary_search(c.clusters[labels[v]].vertices.begin(),
                                    c.clusters[labels[v]].vertices.end(),
                                    static_cast<VertexId>(v))) {
              within = false;
            }
          }
          ok = ok && within;
        }
        doc["report"] = {{"bound", bound},
                         {"max_diam", length_json(worst)},
                         {"witness", std::move(witness)},
                         {"within_clusters", within},
                         {"pass", ok}};
      }
      doc["pass"] = ok;
      emit(ver_io.output, doc.dump(2) + "\n", io.out);
      return ok ? kExitPass : kExitFail;
    };
  });

  // pipeline
  CommonGraphInput pipe_io;
  PipelineConfig pipe;
  std::optional<double> pipe_rho;
  std::optional<double> pipe_eps;
  std::optional<std::uint64_t> pipe_seed;
  std::string pipe_verify = "full";
  std::optional<Length> pipe_delta;
  auto* pipeline = app.add_subcommand("pipeline", "Run decompose, cover and padded end to end");
  add_io(pipeline, pipe_io);
  pipeline->add_option("--delta", pipe_delta, "Decomposition radius")->required();
  auto* pr = pipeline->add_option("--rho", pipe_rho, "Padding radius factor (>= 1)");
  pipeline->add_option("--epsilon", pipe_eps, "Sets rho = 4/epsilon")->excludes(pr);
  pipeline->add_option("--beta", pipe.beta, "Padding fed to the sampler");
  pipeline->add_option("--gamma", pipe.gamma, "Ball radius factor for the padding check");
  pipeline->add_option("--seed", pipe_seed, "Root seed");
  pipeline->add_option("--trials", pipe.trials, "Monte Carlo trials at --verify full");
  pipeline->add_option("--verify", pipe_verify, "off | structural | full");
  pipeline->add_option("--radius-lambda", pipe.radius_lambda, "Texp parameter for radii");
  pipeline->add_option("--gamma-target", pipe.gamma_target, "Buffer target for the decomposition");
  pipeline->add_option("--gamma-retries", pipe.gamma_retries, "Attempts for --gamma-target");
  pipeline->add_flag("--skip-buffer-check", pipe.skip_buffer_check, "Do not measure the buffer");
  pipeline->callback([&] {
    action = [&] {
      require_delta(*pipe_delta);
      pipe.delta = *pipe_delta;
      pipe.rho = resolve_rho(pipe_rho, pipe_eps);
      pipe.seed = resolve_seed(pipe_seed);
      pipe.verify = parse_level(pipe_verify);
      const WeightedGraph g = load_graph(pipe_io.input, io.in);
      const PipelineResult r = run_pipeline(g, pipe);
      emit(pipe_io.output, r.report, io.out);
      for (const auto& f : r.failures) io.err << "FAIL " << f << "\n";
      return r.pass ? kExitPass : kExitFail;
    };
  });

  // bench
  std::string bench_family = "grid";
  std::vector<std::size_t> bench_sizes{16, 64, 256};
  std::vector<double> bench_deltas{2};
  std::vector<double> bench_rhos{1};
  std::optional<std::uint64_t> bench_seed;
  std::string bench_output = "-";
  auto* bench = app.add_subcommand("bench", "Time the stages over a parameter grid (CSV)");
  bench->add_option("--family", bench_family, "Generator family");
  bench->add_option("--sizes", bench_sizes, "Vertex counts (grids use the nearest square)")
      ->delimiter(',');
  bench->add_option("--deltas", bench_deltas, "Delta values")->delimiter(',');
  bench->add_option("--rhos", bench_rhos, "Rho values")->delimiter(',');
  bench->add_option("--seed", bench_seed, "Seed");
  bench->add_option("--output,-o", bench_output, "CSV output");
  bench->callback([&] {
    action = [&] {
      const std::uint64_t seed = resolve_seed(bench_seed);
      std::ostringstream csv;
      csv << "family,n,m,delta,rho,decompose_ms,cover_ms,boundary_ms,sample_ms,supernodes,w,"
             "what,clusters,s,class_count\n";
      using Clock = std::chrono::steady_clock;
      auto ms = [](Clock::time_point a, Clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
      };
      for (std::size_t size : bench_sizes) {
        FamilySpec spec;
        spec.family = parse_family(bench_family);
        spec.seed = seed;
        if (spec.family == Family::kGrid || spec.family == Family::kGridWeighted) {
          const auto side = static_cast<std::size_t>(std::lround(std::sqrt(size)));
          spec.rows = spec.cols = std::max<std::size_t>(side, 1);
        } else if (spec.family == Family::kComplete) {
          spec.m = size;
        } else {
          spec.n = size;
        }
        const WeightedGraph g = generate(spec);
        for (double delta : bench_deltas) {
          for (double rho : bench_rhos) {
            CopConfig cfg;
            cfg.delta = delta;
            cfg.seed = derive_seed(seed, "cop");
            const auto t0 = Clock::now();
            const PartitionTree tree = build_cop_decomposition(g, cfg);
            const auto t1 = Clock::now();
            const Cover c = build_cover(g, tree, rho, delta);
            const auto t2 = Clock::now();
            const BoundaryDistances bd = boundary_distances(g, c);
            const auto t3 = Clock::now();
            const Length big_delta = (4.0 + 8.0 * rho) * delta;
            const PaddedPartition p =
                sample_padded(g, c, bd, big_delta / (rho * delta), big_delta,
                              derive_seed(seed, "padded"));
            const auto t4 = Clock::now();
            (void)p;
            std::size_t w = 0;
            for (std::size_t i = 0; i < tree.size(); ++i) {
              w = std::max(w, tree.bag(static_cast<NodeId>(i)).size());
            }
            std::size_t what = 0;
            for (NodeId r : tree.roots()) {
              what = std::max(what, subtree_width(SubtreeView::Below(tree, r)));
            }
            csv << family_name(spec.family) << ',' << g.vertex_count() << ',' << g.edge_count()
                << ',' << delta << ',' << rho << ',' << ms(t0, t1) << ',' << ms(t1, t2) << ','
                << ms(t2, t3) << ',' << ms(t3, t4) << ',' << tree.size() << ',' << w << ','
                << what << ',' << c.clusters.size() << ',' << c.s << ','
                << c.color_classes.size() << '\n';
          }
        }
      }
      emit(bench_output, csv.str(), io.out);
      return kExitPass;
    };
  });

  // oracle (debugging aid, not listed in help)
  CommonGraphInput orc_io;
  std::string orc_claim = "apsp";
  std::size_t orc_t = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->group("");
  add_io(oracle_cmd, orc_io);
  oracle_cmd->add_option("--claim", orc_claim, "apsp | minor");
  oracle_cmd->add_option("--t", orc_t, "Clique size for --claim minor");
  oracle_cmd->callback([&] {
    action = [&] {
      const WeightedGraph g = load_graph(orc_io.input, io.in);
      json doc = {{"schema_version", 1}, {"claim", orc_claim}};
      if (orc_claim == "apsp") {
        json rows = json::array();
        for (const auto& row : oracle::apsp_bruteforce(g)) {
          json r = json::array();
          for (Length x : row) r.push_back(length_json(x));
          rows.push_back(std::move(r));
        }
        doc["distances"] = std::move(rows);
      } else if (orc_claim == "minor") {
        doc["t"] = orc_t;
        doc["contains"] = oracle::minor_search(g, orc_t);
      } else {
        throw UsageError("unknown oracle claim '" + orc_claim + "'");
      }
      emit(orc_io.output, doc.dump(2) + "\n", io.out);
      return kExitPass;
    };
  });

  std::vector<const char*> argv;
  argv.push_back("minordecomp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    io.out << "minordecomp 0.1.0\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    io.err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    io.err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const StructuralError& e) {
    io.err << "structural error: " << e.what() << "\n";
    return kExitFail;
  } catch (const oracle::OracleRefusal& e) {
    io.err << "oracle refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace minordecomp::cli
