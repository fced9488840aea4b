/*
 * Copyright 2026 The xbc Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// xbc: exact and sampled set betweenness from the command line.
//
//   xbc compute   --graph G [--set a,b,c] --measure b|gb|cb|xb [--method ie|direct|auto]
//   xbc estimate  --graph G --set a,b,c --sampler source|pair|path|general --samples T --seed S
//   xbc correlate --graph G [--size 2] [--out rows.csv]
//   xbc bench     --graph G [--sizes 2..5] [--trials 50] [--seed 0] [--out bench.csv]
//
// Vertex ids on the command line and in output are the ids used in the
// input file. Exit codes: 0 ok, 1 usage, 2 data error, 3 guard or overflow.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xbc/analysis.hpp"
#include "xbc/exact.hpp"
#include "xbc/graph.hpp"
#include "xbc/sampling.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitGuard = 3;

struct GraphOptions {
  std::string path;
  bool allow_disconnected = false;
  std::string base = "auto";
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("--graph", opts.path, "Edge-list file")->required();
  cmd->add_flag("--allow-disconnected", opts.allow_disconnected,
                "Keep only the largest connected component instead of failing");
  cmd->add_option("--index-base", opts.base, "Vertex id base of the file")
      ->check(CLI::IsMember({"auto", "0", "1"}));
}

xbc::Graph load(const GraphOptions& opts) {
  xbc::LoadOptions lo;
  lo.require_connected = !opts.allow_disconnected;
  lo.base = opts.base == "0" ? xbc::IndexBase::kZero : opts.base == "1" ? xbc::IndexBase::kOne : xbc::IndexBase::kAuto;
  auto result = xbc::load_edge_list_file(opts.path, lo);
  if (result.duplicates_dropped || result.self_loops_dropped) {
    std::cerr << "note: dropped " << result.duplicates_dropped << " duplicate edge(s) and "
              << result.self_loops_dropped << " self-loop(s)\n";
  }
  if (opts.allow_disconnected) return xbc::largest_component(result.graph);
  return std::move(result.graph);
}

std::vector<std::int64_t> parse_labels(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad vertex id '" + item + "' in --set");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--set is empty");
  return out;
}

std::string join_labels(const xbc::Graph& g, const xbc::VertexSet& a, char sep) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(g.label(a[i]));
  }
  return s;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw xbc::DataError("cannot write " + path);
  return out;
}

struct ComputeArgs {
  GraphOptions graph;
  std::string set;
  std::string measure;
  std::string method = "auto";
  bool unordered = false;
  std::string out;
  std::size_t guard = xbc::kDefaultSubsetGuard;
};

int run_compute(const ComputeArgs& args) {
  const xbc::Graph g = load(args.graph);
  const xbc::Convention conv{args.unordered};
  const xbc::CsvMetadata meta{args.graph.path, conv, std::nullopt};

  if (args.measure == "b") {
    const auto b = xbc::betweenness_all(g);
    std::vector<xbc::Vertex> which;
    if (args.set.empty()) {
      for (xbc::Vertex v = 0; v < g.num_vertices(); ++v) which.push_back(v);
    } else {
      for (auto label : parse_labels(args.set)) which.push_back(g.vertex_of(label));
    }
    for (auto v : which) std::cout << g.label(v) << ": " << conv.present(b[v]) << '\n';
    if (!args.out.empty()) {
      auto out = open_out(args.out);
      out << "# tool: xbc " << xbc::kVersion << "\n# graph: " << meta.graph_path << "\n# convention: "
          << conv.name() << "\nvertex,b\n";
      for (auto v : which) out << g.label(v) << ',' << conv.present(b[v]) << '\n';
    }
    return 0;
  }

  if (args.set.empty()) throw std::invalid_argument("--set is required for measure " + args.measure);
  const auto labels = parse_labels(args.set);
  const xbc::VertexSet a = xbc::vertex_set_from_labels(g, labels);
  const xbc::SetCentrality sc(g);
  xbc::Count value = 0;
  if (args.measure == "cb") {
    value = sc.co_betweenness(a);
  } else if (args.measure == "gb") {
    value = args.method == "ie" ? sc.group_betweenness_ie(a, args.guard) : sc.group_betweenness_direct(a);
  } else {
    value = args.method == "ie" ? sc.exclusive_betweenness_ie(a, args.guard) : sc.exclusive_betweenness_direct(a);
  }
  std::cout << args.measure << '(' << join_labels(g, a, ',') << "): " << conv.present(value) << '\n';
  if (!args.out.empty()) {
    auto out = open_out(args.out);
    out << "# tool: xbc " << xbc::kVersion << "\n# graph: " << meta.graph_path << "\n# convention: "
        << conv.name() << "\n# method: " << args.method << "\nset," << args.measure << '\n'
        << join_labels(g, a, '-') << ',' << conv.present(value) << '\n';
  }
  return 0;
}

struct EstimateArgs {
  GraphOptions graph;
  std::string set;
  std::string sampler = "pair";
  std::string distribution = "uniform-pair";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool unordered = false;
};

int run_estimate(const EstimateArgs& args) {
  const xbc::Graph g = load(args.graph);
  const xbc::VertexSet a = xbc::vertex_set_from_labels(g, parse_labels(args.set));
  xbc::SampleEstimate est;
  if (args.sampler == "source") {
    est = xbc::estimate_source_sampling(g, a, args.samples, args.seed);
  } else if (args.sampler == "pair") {
    est = xbc::estimate_pair_sampling(g, a, args.samples, args.seed);
  } else if (args.sampler == "path") {
    est = xbc::estimate_path_sampling(g, a, args.samples, args.seed);
  } else {
    const auto dist = args.distribution == "uniform-source"
                          ? xbc::PairDistribution::uniform_source(g, a.members())
                          : xbc::PairDistribution::uniform_pair(g, a.members());
    est = xbc::estimate_general(g, a, dist, args.samples, args.seed);
  }
  const double scale = args.unordered ? 0.5 : 1.0;
  std::cout << "sampler: " << args.sampler;
  if (args.sampler == "general") std::cout << " (" << args.distribution << ')';
  std::cout << "\nset: " << join_labels(g, a, ',') << "\nconvention: " << (args.unordered ? "unordered" : "ordered")
            << "\nmean: " << fmt_double(est.mean * scale)
            << "\nsample_variance: " << fmt_double(est.sample_variance * scale * scale)
            << "\nsamples: " << est.samples << "\nseed: " << est.seed << '\n';
  return 0;
}

struct CorrelateArgs {
  GraphOptions graph;
  std::size_t size = 2;
  std::string out;
  bool unordered = false;
  std::uint64_t guard = xbc::kDefaultEnumerationGuard;
};

int run_correlate(const CorrelateArgs& args) {
  const xbc::Graph g = load(args.graph);
  const xbc::SetCentrality sc(g);
  const xbc::Convention conv{args.unordered};
  const auto report = xbc::run_correlation(sc, args.size, conv, args.guard);
  std::cout << "sets: " << report.rows.size() << '\n';
  for (const auto& c : report.coefficients) {
    std::cout << "pearson(" << c.x << ',' << c.y << "): " << (c.pearson ? fmt_double(*c.pearson) : "undefined")
              << "\nspearman(" << c.x << ',' << c.y << "): "
              << (c.spearman ? fmt_double(*c.spearman) : "undefined") << '\n';
  }
  if (!args.out.empty()) {
    auto out = open_out(args.out);
    xbc::write_correlation_csv(out, g, report, {args.graph.path, conv, std::nullopt});
  }
  return 0;
}

struct BenchArgs {
  GraphOptions graph;
  std::string sizes = "2..5";
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t guard = xbc::kDefaultSubsetGuard;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto k = std::stoul(text);
      return {k, k};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --sizes '" + text + "', expected lo..hi");
  }
}

int run_bench(const BenchArgs& args) {
  const xbc::Graph g = load(args.graph);
  const auto [lo, hi] = parse_range(args.sizes);
  const auto report = xbc::run_bench(g, lo, hi, args.trials, args.seed, args.guard);
  std::printf("cache build: %.6f s\n", report.cache_build_seconds);
  std::printf("%4s %7s %14s %14s\n", "k", "trials", "max_s", "median_s");
  for (const auto& r : report.rows) {
    std::printf("%4zu %7zu %14.6f %14.6f\n", r.set_size, r.seconds.size(), r.max_seconds(), r.median_seconds());
  }
  if (!args.out.empty()) {
    auto out = open_out(args.out);
    xbc::write_bench_csv(out, report, {args.graph.path, {}, args.seed});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusive, group and co-betweenness of vertex sets"};
  app.set_version_flag("--version", std::string("xbc ") + xbc::kVersion);
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact centrality of a vertex set (or of every vertex)");
  add_graph_options(c, compute.graph);
  c->add_option("--set", compute.set, "Comma-separated vertex ids");
  c->add_option("--measure", compute.measure, "b, gb, cb or xb")
      ->required()
      ->check(CLI::IsMember({"b", "gb", "cb", "xb"}));
  c->add_option("--method", compute.method, "ie, direct or auto")->check(CLI::IsMember({"ie", "direct", "auto"}));
  c->add_flag("--unordered", compute.unordered, "Halve counts (unordered endpoint pairs)");
  c->add_option("--out", compute.out, "Also write a CSV file");
  c->add_option("--guard", compute.guard, "Largest set size for inclusion-exclusion");

  EstimateArgs estimate;
  auto* e = app.add_subcommand("estimate", "Monte Carlo estimate of exclusive betweenness");
  add_graph_options(e, estimate.graph);
  e->add_option("--set", estimate.set, "Comma-separated vertex ids")->required();
  e->add_option("--sampler", estimate.sampler, "source, pair, path or general")
      ->check(CLI::IsMember({"source", "pair", "path", "general"}));
  e->add_option("--distribution", estimate.distribution, "Pair distribution for the general sampler")
      ->check(CLI::IsMember({"uniform-pair", "uniform-source"}));
  e->add_option("--samples", estimate.samples, "Number of iterations T")->check(CLI::PositiveNumber);
  e->add_option("--seed", estimate.seed, "Random seed");
  e->add_flag("--unordered", estimate.unordered, "Halve the estimate (unordered endpoint pairs)");

  CorrelateArgs correlate;
  auto* r = app.add_subcommand("correlate", "xb, gb and cb of every set of one size, with correlations");
  add_graph_options(r, correlate.graph);
  r->add_option("--size", correlate.size, "Set size");
  r->add_option("--out", correlate.out, "CSV output path");
  r->add_flag("--unordered", correlate.unordered, "Halve counts (unordered endpoint pairs)");
  r->add_option("--guard", correlate.guard, "Largest number of sets to enumerate");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time exact exclusive betweenness on random sets");
  add_graph_options(b, bench.graph);
  b->add_option("--sizes", bench.sizes, "Set size range lo..hi");
  b->add_option("--trials", bench.trials, "Random sets per size")->check(CLI::PositiveNumber);
  b->add_option("--seed", bench.seed, "Random seed");
  b->add_option("--out", bench.out, "CSV output path");
  b->add_option("--guard", bench.guard, "Largest set size for inclusion-exclusion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (e->parsed()) return run_estimate(estimate);
    if (r->parsed()) return run_correlate(correlate);
    return run_bench(bench);
  } catch (const xbc::DataError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitData;
  } catch (const xbc::GuardError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitGuard;
  } catch (const xbc::OverflowError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
}
