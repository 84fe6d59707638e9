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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minordecomp/cop_builder.hpp"
#include "minordecomp/generators.hpp"
#include "minordecomp/oracles.hpp"
#include "minordecomp/padded.hpp"
#include "minordecomp/partition_tree.hpp"
#include "minordecomp/rng.hpp"
#include "minordecomp/separator.hpp"
#include "minordecomp/sparse_cover.hpp"
#include "minordecomp/texp.hpp"
#include "pipeline.hpp"

namespace minordecomp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* name, const Outcome& o) {
  std::printf("%s %-3s %-28s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

FamilySpec grid_spec(std::size_t rows, std::size_t cols, std::uint64_t seed = 0) {
  FamilySpec s;
  s.family = Family::kGrid;
  s.rows = rows;
  s.cols = cols;
  s.seed = seed;
  return s;
}

FamilySpec sized_spec(Family f, std::size_t n, std::uint64_t seed) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.seed = seed;
  s.tree_shape = TreeShape::kRandom;
  return s;
}

PartitionTree decompose(const WeightedGraph& g, Length delta, std::uint64_t seed) {
  CopConfig cfg;
  cfg.delta = delta;
  cfg.seed = seed;
  return build_cop_decomposition(g, cfg);
}

// Largest pairwise distance inside each part, from an oracle distance matrix.
Length max_part_diameter(const oracle::Matrix& d, const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<VertexId>> parts;
  for (std::size_t v = 0; v < labels.size(); ++v) parts[labels[v]].push_back(static_cast<VertexId>(v));
  Length worst = 0;
  for (const auto& [label, verts] : parts) {
    for (VertexId u : verts) {
      for (VertexId v : verts) worst = std::max(worst, d[u][v]);
    }
  }
  return worst;
}

// Criterion 1: every sampled padded partition is Delta-bounded.
Outcome diameter_guarantee() {
  struct Case {
    const char* family;
    WeightedGraph g;
    Length delta;
  };
  std::vector<std::pair<const char*, std::vector<Case>>> families;
  families.push_back({"grid", {{"grid", generate(grid_spec(10, 10)), 1},
                               {"grid", generate(grid_spec(20, 20)), 1},
                               {"grid", generate(grid_spec(20, 20)), 2}}});
  {
    FamilySpec w = grid_spec(20, 20, 5);
    w.family = Family::kGridWeighted;
    families.back().second.push_back({"grid", generate(w), 1.5});
  }
  families.push_back({"tree", {{"tree", generate(sized_spec(Family::kTree, 200, 1)), 2},
                               {"tree", generate(sized_spec(Family::kTree, 1000, 2)), 2}}});
  families.push_back(
      {"series_parallel", {{"sp", generate(sized_spec(Family::kSeriesParallel, 100, 3)), 1},
                           {"sp", generate(sized_spec(Family::kSeriesParallel, 500, 4)), 1}}});
  const std::size_t samples = 20;
  Outcome out;
  std::string detail;
  for (const auto& [name, cases] : families) {
    const auto start = Clock::now();
    Length worst_ratio = 0;
    std::size_t partitions = 0;
    for (const Case& c : cases) {
      const PartitionTree t = decompose(c.g, c.delta, 11);
      const Cover cov = build_cover(c.g, t, 1, c.delta);
      const Length big_delta = 12 * c.delta;
      const auto d = oracle::apsp_bruteforce(c.g, 1000);
      const BoundaryDistances bd = boundary_distances(c.g, cov);
      for (std::size_t i = 0; i < samples; ++i) {
        const PaddedPartition p = sample_padded(c.g, cov, bd, 12, big_delta, derive_seed(99, i));
        const Length diam = max_part_diameter(d, p.assignment);
        worst_ratio = std::max(worst_ratio, diam / big_delta);
        if (diam > big_delta) out.pass = false;
        ++partitions;
      }
    }
    const double secs = seconds_since(start);
    if (secs >= 10) out.pass = false;
    detail += fmt("%s: %zu partitions, max diam/Delta %.3f, %.1fs; ", name, partitions,
                  worst_ratio, secs);
  }
  out.detail = detail;
  return out;
}

// Criterion 2: exact cover properties on 8x8 grids.
Outcome cover_correctness() {
  const auto start = Clock::now();
  const WeightedGraph g = generate(grid_spec(8, 8));
  Outcome out;
  std::size_t covers = 0;
  Length worst_ratio = 0;
  std::size_t max_classes = 0;
  for (double rho : {1.0, 4.0}) {
    for (Length delta : {2.0, 8.0}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PartitionTree t = decompose(g, delta, seed);
        const Cover c = build_cover(g, t, rho, delta);
        std::vector<std::vector<VertexId>> sets;
        for (const Cluster& k : c.clusters) sets.push_back(k.vertices);
        const Length diam_bound = (4 + 8 * rho) * delta;
        const oracle::OracleReport o = oracle::check_cover(g, sets, rho * delta, diam_bound);
        if (!o.pass) {
          out.pass = false;
          out.detail = "rho " + std::to_string(rho) + ": " + o.witness.value_or("");
        }
        const auto d = oracle::apsp_bruteforce(g);
        for (const auto& s : sets) {
          for (VertexId u : s) {
            for (VertexId v : s) worst_ratio = std::max(worst_ratio, d[u][v] / diam_bound);
          }
        }
        std::vector<int> used(c.clusters.size(), 0);
        for (const auto& cls : c.color_classes) {
          std::vector<int> owner(g.vertex_count(), 0);
          for (std::size_t idx : cls) {
            ++used[idx];
            for (VertexId v : c.clusters[idx].vertices) {
              if (owner[v]++ > 0) out.pass = false;
            }
          }
        }
        if (std::any_of(used.begin(), used.end(), [](int u) { return u != 1; })) out.pass = false;
        max_classes = std::max(max_classes, c.color_classes.size());
        ++covers;
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 60) out.pass = false;
  if (out.detail.empty()) {
    out.detail = fmt("%zu covers, max diam/bound %.3f, max classes %zu, %.1fs", covers,
                     worst_ratio, max_classes, secs);
  }
  return out;
}

struct MatrixCase {
  std::string name;
  WeightedGraph g;
  Length delta;
  std::uint64_t seed;
};

std::vector<MatrixCase> test_matrix() {
  std::vector<MatrixCase> out;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    for (Length delta : {1.0, 2.0, 4.0}) {
      out.push_back({"grid8", generate(grid_spec(8, 8)), delta, seed});
      FamilySpec w = grid_spec(9, 9, seed);
      w.family = Family::kGridWeighted;
      out.push_back({"wgrid9", generate(w), delta, seed});
      out.push_back({"tree", generate(sized_spec(Family::kTree, 80, seed)), delta, seed});
      out.push_back({"sp", generate(sized_spec(Family::kSeriesParallel, 80, seed)), delta, seed});
      out.push_back({"outer", generate(sized_spec(Family::kOuterplanar, 60, seed)), delta, seed});
    }
  }
  return out;
}

// Subtree-width by definition: max over members of |bag ∩ members|.
std::size_t width_by_definition(const PartitionTree& t, const std::vector<NodeId>& members) {
  std::vector<char> in(t.size(), 0);
  for (NodeId m : members) in[m] = 1;
  std::size_t w = 0;
  for (NodeId m : members) {
    std::size_t k = 0;
    for (NodeId b : t.bag(m)) k += in[b];
    w = std::max(w, k);
  }
  return w;
}

// Criterion 3: subtree-width drops by one in every residual component.
Outcome width_reduction(const std::vector<MatrixCase>& cases) {
  Outcome out;
  std::size_t steps = 0;
  std::size_t components = 0;
  for (const MatrixCase& c : cases) {
    const PartitionTree t = decompose(c.g, c.delta, c.seed);
    CoverTrace trace;
    build_cover(c.g, t, 1, c.delta, &trace);
    for (const SeparatorStep& step : trace.steps) {
      const SubtreeView view(t, step.members);
      const std::size_t before = width_by_definition(t, step.members);
      for (const SubtreeView& part : residual_components(view, step.separators.selected)) {
        ++components;
        if (width_by_definition(t, part.members()) + 1 > before) {
          out.pass = false;
          out.detail = c.name + " component of width " +
                       std::to_string(width_by_definition(t, part.members())) + " from " +
                       std::to_string(before);
        }
      }
      ++steps;
    }
    if (!trace.width_reduced) out.pass = false;
  }
  if (out.pass) {
    out.detail = fmt("%zu cases, %zu separator steps, %zu residual components, 0 failures",
                     cases.size(), steps, components);
  }
  return out;
}

// Criterion 4: |X[v]| <= 2 alpha Delta / gamma_eff + 2, with X[v] enumerated
// from oracle distances.
Outcome threatener_bound(const std::vector<MatrixCase>& cases) {
  Outcome out;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  double worst_fraction = 0;
  for (const MatrixCase& c : cases) {
    const PartitionTree t = decompose(c.g, c.delta, c.seed);
    const std::size_t n = c.g.vertex_count();
    const BufferReport r = verify_buffered(t, c.g, c.delta, 0, n);
    if (!(r.gamma_eff > 0)) {
      ++skipped;
      continue;
    }
    std::vector<std::vector<Length>> to_node(t.size());
    for (const Supernode& s : t.supernodes()) {
      to_node[s.id] = oracle::distance_to_set(oracle::apsp_induced(c.g, t.domain(s.id)),
                                              s.vertices);
    }
    CoverTrace trace;
    build_cover(c.g, t, 1, c.delta, &trace);
    for (const SeparatorStep& step : trace.steps) {
      const SubtreeView view(t, step.members);
      for (double alpha : {1.0, 2.0, 4.0}) {
        const double bound = 2 * alpha * c.delta / r.gamma_eff + 2;
        for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
          std::size_t count = 0;
          for (NodeId x : step.separators.selected) {
            if (!t.domain(x).contains(v)) continue;
            for (NodeId xp : t.bag(x)) {
              if (view.contains(xp) && to_node[xp][v] <= alpha * c.delta) {
                ++count;
                break;
              }
            }
          }
          worst_fraction = std::max(worst_fraction, static_cast<double>(count) / bound);
          if (static_cast<double>(count) > bound) {
            out.pass = false;
            out.detail = c.name + fmt(" vertex %d alpha %.0f: %zu > %.2f", v, alpha, count, bound);
          }
          ++checked;
        }
      }
    }
  }
  if (out.pass) {
    out.detail = fmt("%zu (step, alpha, v) triples, max |X[v]|/bound %.3f, %zu cases gamma_eff=0",
                     checked, worst_fraction, skipped);
  }
  return out;
}

struct PaddingRun {
  Outcome padding;
  std::size_t margin_checked = 0;
  std::size_t margin_failures = 0;
};

// Criteria 5 and 9 share the Monte Carlo trials.
PaddingRun padding_probability(std::size_t rows, Length delta, std::size_t trials,
                               const std::vector<double>& gamma_factors) {
  const auto start = Clock::now();
  const WeightedGraph g = generate(grid_spec(rows, rows));
  const double rho = 1;
  const PartitionTree t = decompose(g, delta, 1);
  const Cover c = build_cover(g, t, rho, delta);
  const Length big_delta = (4 + 8 * rho) * delta;
  const double beta = big_delta / (rho * delta);
  PaddingRun run;
  std::string detail = fmt("s=%zu beta=%.0f lambda=%.3f clusters=%zu; ", c.s, beta,
                           padding_lambda(c.s), c.clusters.size());
  for (double factor : gamma_factors) {
    const double gamma = factor / beta;
    const PaddingEstimate e =
        estimate_padding(g, c, beta, big_delta, gamma, trials, derive_seed(5, factor * 1000));
    if (!e.pass || e.membership_violations > 0) run.padding.pass = false;
    run.margin_checked += e.margin_checked;
    run.margin_failures += e.margin_failures;
    detail += fmt("g=%.4g/beta: min p %.4f LCB99 %.4f >= %.3g; ", factor, e.min_probability,
                  e.lower_bound, e.target);
  }
  detail += fmt("%.1fs", seconds_since(start));
  if (seconds_since(start) >= 300) run.padding.pass = false;
  run.padding.detail = detail;
  return run;
}

// Criterion 6: Texp sampler against the analytic CDF and mean.
Outcome texp_sampler() {
  Outcome out;
  std::string detail;
  const std::size_t n = 1000000;
  for (double lambda : {0.5, 2.0, 10.0}) {
    TexpSampler s(lambda, derive_seed(6, static_cast<std::uint64_t>(lambda * 10)));
    std::vector<double> y(n);
    double sum = 0;
    for (double& v : y) {
      v = s();
      sum += v;
    }
    std::sort(y.begin(), y.end());
    const double z = 1 - std::exp(-lambda);
    double ks = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double f = (1 - std::exp(-lambda * y[i])) / z;
      ks = std::max({ks, std::abs(f - static_cast<double>(i) / n),
                     std::abs(static_cast<double>(i + 1) / n - f)});
    }
    const double mean = 1 / lambda - std::exp(-lambda) / z;
    const double err = std::abs(sum / n - mean);
    if (ks > 0.01 || err > 0.001) out.pass = false;
    detail += fmt("lambda %.1f: KS %.5f, mean err %.5f; ", lambda, ks, err);
  }
  out.detail = detail;
  return out;
}

// Bag sizes by definition: eta plus every proper ancestor with an edge into
// dom(eta), where dom is found by walking parent links.
std::size_t max_bag_by_definition(const PartitionTree& t, const WeightedGraph& g) {
  const std::size_t k = t.size();
  std::vector<NodeId> owner(g.vertex_count());
  for (const Supernode& s : t.supernodes()) {
    for (VertexId v : s.vertices) owner[v] = s.id;
  }
  auto ancestors = [&](NodeId x) {
    std::vector<NodeId> out;
    for (NodeId a = x; a != kNoNode; a = t.node(a).parent) out.push_back(a);
    return out;
  };
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (const Edge& e : g.edges()) {
    // Every node whose domain holds u is an ancestor of owner(u).
    for (NodeId a : ancestors(owner[e.u])) adj[a][owner[e.v]] = 1;
    for (NodeId a : ancestors(owner[e.v])) adj[a][owner[e.u]] = 1;
  }
  std::size_t worst = 0;
  for (NodeId x = 0; x < static_cast<NodeId>(k); ++x) {
    std::size_t bag = 1;
    for (NodeId a = t.node(x).parent; a != kNoNode; a = t.node(a).parent) bag += adj[x][a];
    worst = std::max(worst, bag);
  }
  return worst;
}

// Criterion 7: bag size <= r - 1 on K_r-minor-free families.
Outcome bag_bound() {
  struct Fam {
    const char* name;
    std::function<FamilySpec(std::uint64_t)> spec;
    std::size_t limit;
  };
  const std::vector<Fam> fams{
      {"tree", [](std::uint64_t s) { return sized_spec(Family::kTree, 150, s); }, 2},
      {"outerplanar", [](std::uint64_t s) { return sized_spec(Family::kOuterplanar, 100, s); }, 3},
      {"series_parallel",
       [](std::uint64_t s) { return sized_spec(Family::kSeriesParallel, 120, s); }, 3},
      {"grid",
       [](std::uint64_t s) {
         FamilySpec f = grid_spec(8 + s % 5, 8 + s % 7, s);
         if (s % 2 == 1) f.family = Family::kGridWeighted;
         return f;
       },
       4},
  };
  Outcome out;
  std::string detail;
  for (const Fam& f : fams) {
    std::size_t worst = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const WeightedGraph g = generate(f.spec(seed));
      const Length delta = 1 + static_cast<Length>(seed % 4);
      const PartitionTree t = decompose(g, delta, seed);
      const std::size_t bag = max_bag_by_definition(t, g);
      worst = std::max(worst, bag);
      if (bag > f.limit) out.pass = false;
    }
    detail += fmt("%s max %zu (<= %zu); ", f.name, worst, f.limit);
  }
  out.detail = detail;
  return out;
}

// Criterion 8: shortest paths against Floyd-Warshall, and forbidden minors.
Outcome oracle_equivalence() {
  Outcome out;
  Rng rng(8);
  std::size_t runs = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(10);
    const double p = 0.15 + 0.7 * rng.uniform01();
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.uniform01() < p) {
          e.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v),
                       static_cast<Length>(1 + rng.below(9)) / 2});
        }
      }
    }
    const WeightedGraph g(n, e);
    const auto d = oracle::apsp_bruteforce(g);
    for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
      if (shortest_paths(g, s) != d[s]) out.pass = false;
      ++runs;
    }
  }
  std::size_t minor_checks = 0;
  std::vector<FamilySpec> small{grid_spec(3, 4), grid_spec(2, 6)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    small.push_back(sized_spec(Family::kTree, 5 + seed % 8, seed));
    small.push_back(sized_spec(Family::kSeriesParallel, 4 + seed % 9, seed));
    small.push_back(sized_spec(Family::kOuterplanar, 4 + seed % 9, seed));
  }
  FamilySpec sp;
  sp.family = Family::kSeriesParallel;
  for (std::size_t depth : {1, 2, 3}) {
    sp.depth = depth;
    small.push_back(sp);
  }
  FamilySpec k;
  k.family = Family::kComplete;
  for (std::size_t m : {3, 4, 5}) {
    k.m = m;
    small.push_back(k);
  }
  for (const FamilySpec& s : small) {
    const WeightedGraph g = generate(s);
    const std::size_t r = forbidden_clique(s);
    if (g.vertex_count() > 12 || oracle::minor_search(g, r)) {
      out.pass = false;
      out.detail = std::string(family_name(s.family)) + " contains its forbidden minor";
    }
    ++minor_checks;
  }
  if (out.pass) {
    out.detail = fmt("%zu single-source runs match APSP; %zu generated graphs free of K_r",
                     runs, minor_checks);
  }
  return out;
}

// Criterion 10: identical reports for identical inputs.
Outcome determinism() {
  Outcome out;
  FamilySpec w = grid_spec(8, 8, 3);
  w.family = Family::kGridWeighted;
  const std::vector<WeightedGraph> graphs{generate(grid_spec(6, 6)), generate(w),
                                          generate(sized_spec(Family::kTree, 100, 4))};
  std::size_t runs = 0;
  for (const WeightedGraph& g : graphs) {
    cli::PipelineConfig cfg;
    cfg.delta = 2;
    cfg.seed = 7;
    cfg.trials = 100;
    const auto a = cli::run_pipeline(g, cfg);
    const auto b = cli::run_pipeline(g, cfg);
    if (cli::strip_timing(a.report) != cli::strip_timing(b.report)) out.pass = false;
    ++runs;
  }
  out.detail = fmt("%zu pipelines, reports identical apart from timing", runs);
  return out;
}

}  // namespace
}  // namespace minordecomp

int main() {
  using namespace minordecomp;
  report("1", "diameter guarantee", diameter_guarantee());
  report("2", "cover correctness", cover_correctness());
  const auto cases = test_matrix();
  report("3", "subtree-width reduction", width_reduction(cases));
  report("4", "threatener bound", threatener_bound(cases));
  const PaddingRun five = padding_probability(8, 8, 10000, {1.0 / 16, 1.0 / 8, 1.0 / 4});
  report("5", "padding probability", five.padding);
  // Same check where clusters and balls are nontrivial.
  const PaddingRun wide = padding_probability(20, 4, 10000, {1.0 / 16, 1.0 / 8, 1.0 / 4});
  report("5b", "padding probability, 20x20", wide.padding);
  report("6", "truncated exponential", texp_sampler());
  report("7", "bag bound", bag_bound());
  report("8", "oracle equivalence", oracle_equivalence());
  Outcome margin;
  margin.pass = five.margin_failures == 0 && wide.margin_failures == 0;
  margin.detail = fmt("%zu margin events, %zu failures (20x20: %zu events, %zu failures)",
                      five.margin_checked, five.margin_failures, wide.margin_checked,
                      wide.margin_failures);
  report("9", "margin implies containment", margin);
  report("10", "determinism", determinism());
  return failures == 0 ? 0 : 1;
}
