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

#include "pipeline.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"
#include "minordecomp/cop_builder.hpp"
#include "minordecomp/padded.hpp"
#include "minordecomp/partition_tree.hpp"
#include "minordecomp/rng.hpp"
#include "minordecomp/separator.hpp"
#include "minordecomp/sparse_cover.hpp"
#include "report_util.hpp"

namespace minordecomp::cli {

using nlohmann::json;

namespace {

class StageClock {
 public:
  explicit StageClock(json& timing) : timing_(timing) {}
  void lap(const char* stage) {
    const auto now = std::chrono::steady_clock::now();
    timing_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  json& timing_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

PipelineResult run_pipeline(const WeightedGraph& g, const PipelineConfig& cfg) {
  PipelineResult result;
  json timing = json::object();
  StageClock clock(timing);
  json checks = json::object();
  auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    checks[name] = ok;
    if (!ok) {
      result.pass = false;
      result.failures.push_back(detail.empty() ? name : name + ": " + detail);
    }
  };

  const std::size_t n = g.vertex_count();
  const Length delta = cfg.delta;
  const double rho = cfg.rho;
  const Length pad_radius = rho * delta;
  const Length diam_bound = (4.0 + 8.0 * rho) * delta;
  const double beta = cfg.beta.value_or(diam_bound / pad_radius);
  const double gamma = cfg.gamma.value_or(1.0 / (8.0 * beta));
  const bool full = cfg.verify == VerifyLevel::kFull;
  const bool structural = cfg.verify != VerifyLevel::kOff;

  // Decomposition.
  CopConfig cop;
  cop.delta = delta;
  cop.lambda_radius = cfg.radius_lambda;
  cop.seed = derive_seed(cfg.seed, "cop");
  cop.max_gamma_retries = cfg.gamma_retries;
  PartitionTree tree;
  std::size_t attempts = 1;
  bool target_met = true;
  if (cfg.gamma_target) {
    GammaSearchResult search = build_with_gamma_search(g, *cfg.gamma_target, cop);
    tree = std::move(search.tree);
    attempts = search.attempts;
    target_met = search.target_met;
  } else {
    tree = build_cop_decomposition(g, cop);
  }
  clock.lap("decompose");

  BufferCheckOptions bopts;
  bopts.skip_buffer = cfg.skip_buffer_check || !full;
  BufferReport buffer;
  if (structural) {
    buffer = verify_buffered(tree, g, delta, 0, std::max<std::size_t>(n, 1), bopts);
    check("partition_tree", buffer.ok(),
          buffer.ok() ? "" : std::string(to_string(buffer.violations.front().kind)) + " " +
                                 buffer.violations.front().detail);
  }
  clock.lap("verify_tree");

  // Cover.
  CoverTrace trace;
  Cover cov = build_cover(g, tree, rho, delta, &trace);
  clock.lap("cover");

  Length max_diam = 0;
  if (structural) {
    const CoverReport cr = verify_cover(cov, g, VertexSet::All(n), pad_radius, diam_bound);
    max_diam = cr.max_diameter;
    check("cover_diameter", cr.diameter_violations.empty());
    check("cover_padding", cr.padding_violations.empty(),
          cr.padding_violations.empty()
              ? ""
              : "ball around " + std::to_string(cr.padding_violations.front().center));
    check("color_classes_disjoint", cr.color_violations.empty() && cr.class_problem.empty());
    check("subtree_width_reduction", trace.width_reduced);
    check("recursion_depth", trace.depth_bounded);
    check("active_sets_disjoint", trace.active_disjoint);
    check("cluster_containment", trace.containment);
  }
  json threat = json::array();
  if (full && buffer.buffer_checked && buffer.gamma_eff > 0) {
    DomainDistances dd(g, tree);
    for (double alpha : {1.0, 2.0, 4.0}) {
      std::size_t worst = 0;
      double bound = 0;
      bool ok = true;
      for (const SeparatorStep& step : trace.steps) {
        const SubtreeView view(tree, step.members);
        const ThreatenerCheck tc =
            check_threateners(step.separators, view, alpha, delta, buffer.gamma_eff, dd);
        worst = std::max(worst, tc.max_count);
        bound = tc.bound;
        ok = ok && tc.ok;
      }
      threat.push_back({{"alpha", alpha}, {"max_count", worst}, {"bound", bound}});
      check("threateners_alpha_" + std::to_string(static_cast<int>(alpha)), ok);
    }
  }
  clock.lap("verify_cover");

  // Padded decomposition.
  const Length big_delta = diam_bound;
  const std::uint64_t pseed = derive_seed(cfg.seed, "padded");
  const PaddedPartition first = sample_padded(g, cov, beta, big_delta, derive_seed(pseed, 0));
  clock.lap("padded");
  if (structural) {
    const PartitionCheck pc = check_partition(g, cov, first);
    check("padded_diameter", pc.max_diameter <= big_delta);
    check("padded_within_clusters", pc.within_clusters);
    check("membership_restriction", first.membership_violations == 0);
  }
  json padding = json::object();
  if (full && cfg.trials > 0) {
    const PaddingEstimate est =
        estimate_padding(g, cov, beta, big_delta, gamma, cfg.trials, pseed);
    padding = {
        {"gamma", gamma},
        {"trials", est.trials},
        {"min_pad_prob", est.min_probability},
        {"min_pad_vertex", est.min_vertex},
        {"lower_bound_99", est.lower_bound},
        {"bound", est.target},
        {"margin_checked", est.margin_checked},
        {"margin_failures", est.margin_failures},
    };
    check("padding_probability", est.pass);
    check("margin_containment", est.margin_failures == 0);
    check("membership_restriction_trials", est.membership_violations == 0);
  }
  clock.lap("verify_padded");

  std::size_t what = 0;
  for (NodeId r : tree.roots()) what = std::max(what, subtree_width(SubtreeView::Below(tree, r)));

  json report = {
      {"schema_version", 1},
      {"input", {{"vertex_count", n}, {"edge_count", g.edge_count()}}},
      {"params",
       {{"delta", delta},
        {"rho", rho},
        {"beta", beta},
        {"gamma", gamma},
        {"seed", cfg.seed},
        {"trials", cfg.trials},
        {"verify", cfg.verify == VerifyLevel::kFull         ? "full"
                   : cfg.verify == VerifyLevel::kStructural ? "structural"
                                                            : "off"}}},
      {"measured",
       {{"supernodes", tree.size()},
        {"gamma_eff", length_json(buffer.gamma_eff, buffer.buffer_checked)},
        {"w", buffer.max_bag_size},
        {"max_radius", buffer.max_radius},
        {"max_skeleton_leaves", buffer.max_skeleton_leaves},
        {"what", what},
        {"recursion_depth", trace.max_recursion_depth},
        {"clusters", cov.clusters.size()},
        {"s", cov.s},
        {"class_count", cov.color_classes.size()},
        {"max_cluster_diam", max_diam},
        {"lambda", first.lambda},
        {"gamma_attempts", attempts},
        {"gamma_target_met", target_met},
        {"threateners", std::move(threat)},
        {"padding", std::move(padding)}}},
      {"checks", std::move(checks)},
      {"failures", result.failures},
      {"pass", result.pass},
      {"timing", std::move(timing)},
  };
  result.report = report.dump(2) + "\n";
  return result;
}

std::string strip_timing(std::string_view report) {
  json doc = json::parse(report);
  doc.erase("timing");
  return doc.dump();
}

}  // namespace minordecomp::cli
