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

#include "xbc/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "xbc/sampling.hpp"
#include "xbc/stats.hpp"

namespace xbc {

const Coefficients& CorrelationReport::between(const std::string& x, const std::string& y) const {
  for (const auto& c : coefficients) {
    if ((c.x == x && c.y == y) || (c.x == y && c.y == x)) return c;
  }
  throw std::out_of_range("no coefficients for " + x + "," + y);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

Coefficients coefficients_of(const char* xn, const std::vector<double>& x, const char* yn,
                             const std::vector<double>& y) {
  Coefficients c{xn, yn, std::nullopt, std::nullopt};
  try {
    c.pearson = pearson(x, y);
  } catch (const UndefinedResultError&) {
  }
  try {
    c.spearman = spearman(x, y);
  } catch (const UndefinedResultError&) {
  }
  return c;
}

std::string format_coefficient(const std::optional<double>& v) {
  if (!v) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

}  // namespace

CorrelationReport run_correlation(const SetCentrality& sc, std::size_t size, Convention convention,
                                  std::uint64_t guard) {
  const Graph& g = sc.graph();
  const std::size_t n = g.num_vertices();
  if (size == 0 || size >= n) throw std::invalid_argument("set size must be in [1, n)");
  const std::uint64_t sets = binomial(n, size);
  if (sets > guard) {
    throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(size) + ") = " + std::to_string(sets) +
                     " sets exceeds enumeration guard " + std::to_string(guard));
  }

  CorrelationReport report;
  report.set_size = size;
  report.rows.reserve(sets);
  std::vector<Vertex> members(size);
  std::iota(members.begin(), members.end(), Vertex{0});
  while (true) {
    const VertexSet a(members, n);
    report.rows.push_back({a, convention.present(sc.exclusive_betweenness_direct(a)),
                           convention.present(sc.group_betweenness_direct(a)),
                           convention.present(sc.co_betweenness(a))});
    // Next combination in lexicographic order.
    std::size_t i = size;
    while (i > 0 && members[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++members[i - 1];
    for (std::size_t j = i; j < size; ++j) members[j] = members[j - 1] + 1;
  }

  std::vector<double> xb, gb, cb;
  for (const auto& r : report.rows) {
    xb.push_back(static_cast<double>(r.xb));
    gb.push_back(static_cast<double>(r.gb));
    cb.push_back(static_cast<double>(r.cb));
  }
  if (report.rows.size() >= 2) {
    report.coefficients.push_back(coefficients_of("xb", xb, "gb", gb));
    report.coefficients.push_back(coefficients_of("xb", xb, "cb", cb));
    report.coefficients.push_back(coefficients_of("gb", gb, "cb", cb));
  }
  return report;
}

namespace {

void write_metadata(std::ostream& out, const CsvMetadata& meta) {
  out << "# tool: xbc " << kVersion << '\n';
  out << "# graph: " << meta.graph_path << '\n';
  out << "# convention: " << meta.convention.name() << '\n';
  if (meta.seed) out << "# seed: " << *meta.seed << '\n';
}

std::string render_set(const Graph& g, const VertexSet& a) {
  std::vector<std::int64_t> labels;
  for (Vertex v : a) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(labels[i]);
  }
  return s;
}

}  // namespace

void write_correlation_csv(std::ostream& out, const Graph& g, const CorrelationReport& report,
                           const CsvMetadata& meta) {
  write_metadata(out, meta);
  out << "# set size: " << report.set_size << '\n';
  out << "# sets: " << report.rows.size() << '\n';
  for (const auto& c : report.coefficients) {
    out << "# pearson(" << c.x << ',' << c.y << "): " << format_coefficient(c.pearson) << '\n';
    out << "# spearman(" << c.x << ',' << c.y << "): " << format_coefficient(c.spearman) << '\n';
  }
  out << "set,xb,gb,cb\n";
  for (const auto& r : report.rows) {
    out << render_set(g, r.set) << ',' << r.xb << ',' << r.gb << ',' << r.cb << '\n';
  }
}

namespace {

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "bad number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

CorrelationCsv read_correlation_csv(std::istream& in) {
  CorrelationCsv csv;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      csv.comments.push_back(line);
      continue;
    }
    if (!header) {
      if (line != "set,xb,gb,cb") throw ParseError(line_no, "expected header 'set,xb,gb,cb'");
      header = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      fields.push_back(rest.substr(0, pos));
    }
    fields.push_back(rest);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 columns");
    CsvRow row;
    std::string_view set = fields[0];
    for (std::size_t pos; (pos = set.find('-', 1)) != std::string_view::npos; set.remove_prefix(pos + 1)) {
      row.labels.push_back(parse_number<std::int64_t>(set.substr(0, pos), line_no));
    }
    row.labels.push_back(parse_number<std::int64_t>(set, line_no));
    row.xb = parse_number<Count>(fields[1], line_no);
    row.gb = parse_number<Count>(fields[2], line_no);
    row.cb = parse_number<Count>(fields[3], line_no);
    csv.rows.push_back(std::move(row));
  }
  if (!header) throw DataError("correlation CSV has no header");
  return csv;
}

double BenchRow::max_seconds() const {
  if (seconds.empty()) throw std::logic_error("bench row has no timings");
  return *std::max_element(seconds.begin(), seconds.end());
}

double BenchRow::median_seconds() const {
  if (seconds.empty()) throw std::logic_error("bench row has no timings");
  std::vector<double> sorted(seconds);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  return sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
}

BenchReport run_bench(const Graph& g, std::size_t min_size, std::size_t max_size, std::size_t trials,
                      std::uint64_t seed, std::size_t guard) {
  const std::size_t n = g.num_vertices();
  if (min_size == 0 || min_size > max_size || max_size >= n) {
    throw std::invalid_argument("set sizes must satisfy 1 <= lo <= hi < n");
  }
  if (max_size > guard) {
    throw GuardError("set size " + std::to_string(max_size) + " exceeds inclusion-exclusion guard " +
                     std::to_string(guard));
  }
  if (trials == 0) throw std::invalid_argument("trial count must be at least 1");

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  const auto build_start = Clock::now();
  const SetCentrality sc(g);
  report.cache_build_seconds = std::chrono::duration<double>(Clock::now() - build_start).count();

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t k = min_size; k <= max_size; ++k) {
    BenchRow row;
    row.set_size = k;
    Rng rng = substream(seed, k);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<Vertex> pick;
      std::sample(all.begin(), all.end(), std::back_inserter(pick), k, rng);
      const VertexSet a(std::move(pick), n);
      const auto start = Clock::now();
      static_cast<void>(sc.exclusive_betweenness_ie(a, guard));
      row.seconds.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report, const CsvMetadata& meta) {
  write_metadata(out, meta);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", report.cache_build_seconds);
  out << "# cache build seconds: " << buf << '\n';
  out << "k,trials,max_seconds,median_seconds\n";
  for (const auto& r : report.rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%zu,%zu,%.9f,%.9f\n", r.set_size, r.seconds.size(), r.max_seconds(),
                  r.median_seconds());
    out << line;
  }
}

}  // namespace xbc
