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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "support/test_graphs.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(XBC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string graph(const std::string& name) { return "--graph " + xbc::testing::data_path(name); }

TEST(Cli, ComputeExclusive) {
  const auto r = run("compute " + graph("nine-vertex.edges") + " --set 2,6,7 --measure xb");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "xb(2,6,7): 32\n");
  EXPECT_EQ(run("compute " + graph("nine-vertex.edges") + " --set 2,6,7 --measure xb --method ie").out, r.out);
  EXPECT_EQ(run("compute " + graph("nine-vertex.edges") + " --set 2,6,7 --measure xb --unordered").out,
            "xb(2,6,7): 16\n");
}

TEST(Cli, ComputeBetweenness) {
  const auto r = run("compute " + graph("nine-vertex.edges") + " --measure b");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("5: 58\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("compute " + graph("nine-vertex.edges") + " --set 2,6,7 --measure nope").status, 1);
  EXPECT_EQ(run("compute " + graph("nine-vertex.edges") + " --set 2,99 --measure xb").status, 2);
  EXPECT_EQ(run("compute --graph /nonexistent/file --measure b").status, 2);
  EXPECT_EQ(run("compute " + graph("karate.edges") + " --set 1,2,3 --measure xb --method ie --guard 2").status,
            3);
}

TEST(Cli, EstimateIsReproducible) {
  const std::string args = "estimate " + graph("karate.edges") + " --set 1,34 --sampler path --samples 2000 --seed 9";
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed: 9"), std::string::npos);
  EXPECT_NE(run(args + "1").out, a.out);
}

TEST(Cli, CorrelateWritesCsv) {
  const auto path = std::filesystem::temp_directory_path() / "xbc_cli_test_correlate.csv";
  const auto r = run("correlate " + graph("karate.edges") + " --size 2 --out " + path.string());
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path);
  std::string line;
  std::size_t rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      EXPECT_EQ(line, "set,xb,gb,cb");
      header = true;
    } else {
      ++rows;
    }
  }
  EXPECT_EQ(rows, 561u);
  std::filesystem::remove(path);
}

TEST(Cli, Bench) {
  const auto path = std::filesystem::temp_directory_path() / "xbc_cli_test_bench.csv";
  const auto r = run("bench " + graph("karate.edges") + " --sizes 2..3 --trials 3 --out " + path.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("median_s"), std::string::npos);
  std::ifstream in(path);
  const std::string csv((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(csv.find("k,trials,max_seconds,median_seconds\n2,3,"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run("bench " + graph("karate.edges") + " --sizes 3..2").status, 1);
}

}  // namespace
