// Copyright 2026 The AQED Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <unistd.h>

#include "aqed/cli.hpp"
#include "aqed/oracle.hpp"
#include "aqed/state_io.hpp"
#include "json.hpp"

namespace aqed {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const Outcome o = invoke(std::move(args));
  EXPECT_EQ(o.code, cli::kExitOk) << o.err;
  return json::parse(o.out);
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("aqed_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<double> csv_column(const fs::path& file, int column) {
  std::ifstream is(file);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "t,re,im");
  std::vector<double> values;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c <= column; ++c) std::getline(ls, cell, ',');
    values.push_back(std::stod(cell));
  }
  return values;
}

double peak(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

TEST(CliRun, GroverSixQubitsSpatial) {
  const json j = invoke_json({"run", "--circuit", "grover", "--qubits", "6", "--target", "0",
                              "--iterations", "6", "--engine", "spatial"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["engine"], "spatial");
  EXPECT_EQ(j["most_likely"], 0);
  EXPECT_NEAR(j["probabilities"][0].get<double>(), 0.9965856807867991, 1e-9);
  const auto p = j["probabilities"].get<std::vector<double>>();
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
}

TEST(CliRun, QftIsUniform) {
  const json j = invoke_json(
      {"run", "--circuit", "qft", "--qubits", "6", "--input", "0", "--engine", "spatial"});
  const auto p = j["probabilities"].get<std::vector<double>>();
  ASSERT_EQ(p.size(), 64U);
  for (double x : p) EXPECT_NEAR(x, 1.0 / 64.0, 1e-9);
}

TEST(CliRun, OneQubitGroverOnOracle) {
  const json j = invoke_json({"run", "--circuit", "grover", "--qubits", "1", "--target", "1",
                              "--iterations", "1", "--engine", "oracle"});
  const double expected = oracle::oracle_grover_probability(1, 1, 1);
  EXPECT_NEAR(j["probabilities"][1].get<double>(), expected, 1e-12);
  EXPECT_NEAR(j["probabilities"][0].get<double>(), 0.5, 1e-12);
}

TEST(CliRun, TraceAndOutFile) {
  TempDir dir;
  const fs::path file = dir.path() / "run.json";
  const json j = invoke_json({"run", "--circuit", "qft", "--qubits", "2", "--engine", "spectral",
                              "--trace", "--out", file.string()});
  EXPECT_EQ(j["trace"].size(), j["operations"].get<std::size_t>());
  std::ifstream is(file);
  EXPECT_EQ(json::parse(is), j);
}

TEST(CliRun, DeterministicApartFromTiming) {
  const std::vector<std::string> args = {"run", "--circuit", "grover", "--qubits", "3",
                                         "--target", "6", "--engine", "spectral", "--mixer"};
  json a = invoke_json(args);
  json b = invoke_json(args);
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(CliCompare, EnginesAgree) {
  const json spatial = invoke_json({"compare", "--circuit", "grover", "--qubits", "6", "--target",
                                    "0", "--iterations", "6", "--engine-a", "spatial"});
  EXPECT_LT(spatial["max_rel_deviation"].get<double>(), 1e-9);
  const json spectral = invoke_json(
      {"compare", "--circuit", "qft", "--qubits", "3", "--input", "5", "--engine-a", "spectral"});
  EXPECT_LT(spectral["max_rel_deviation"].get<double>(), 1e-9);
  const json mixer = invoke_json({"compare", "--circuit", "grover", "--qubits", "3", "--target",
                                  "2", "--engine-a", "spectral", "--mixer"});
  EXPECT_LT(mixer["max_rel_deviation"].get<double>(), 0.0032);
  EXPECT_EQ(mixer["mode"], "mixer");
}

TEST(CliResources, SingleSpatialRow) {
  const json j =
      invoke_json({"resources", "--qubits", "3..3", "--encoding", "spatial", "--format", "json"});
  ASSERT_EQ(j["rows"].size(), 1U);
  const json& row = j["rows"][0];
  EXPECT_EQ(row["kind"], "spatial");
  EXPECT_EQ(row["n"], 3);
  EXPECT_EQ(row["stage"], "total");
  EXPECT_EQ(row["mults"], 128);
  EXPECT_EQ(row["adds"], 112);
  EXPECT_EQ(row["opamps"], 32);
}

TEST(CliResources, CsvCoversAllEncodingsAndStages) {
  const Outcome o = invoke({"resources", "--format", "csv", "--stages"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream is(o.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "kind,n,stage,mults,adds,opamps");
  int rows = 0;
  bool saw = false;
  while (std::getline(is, line)) {
    ++rows;
    saw = saw || line == "frequency-parallel,2,projection,16,8,16";
  }
  EXPECT_EQ(rows, 3 * 6 * 5);
  EXPECT_TRUE(saw);
}

TEST(CliResources, TableMentionsEveryEncoding) {
  const Outcome o = invoke({"resources"});
  ASSERT_EQ(o.code, 0);
  for (const char* label : {"Frequency-R", "Frequency-P", "Spatial", "9456", "1264"})
    EXPECT_NE(o.out.find(label), std::string::npos) << label;
}

TEST(CliResources, BadRangesAreUsageErrors) {
  for (const char* range : {"4..2", "0..3", "x", "3..", ""})
    EXPECT_EQ(invoke({"resources", "--qubits", range}).code, cli::kExitUsage) << range;
  EXPECT_EQ(invoke({"resources", "--encoding", "analog"}).code, cli::kExitUsage);
}

TEST(CliEmit, FileRoundTripMatchesBuilder) {
  TempDir dir;
  const fs::path file = dir.path() / "grover.json";
  ASSERT_EQ(invoke({"emit", "--circuit", "grover", "--qubits", "4", "--target", "9", "--out",
                    file.string()})
                .code,
            0);
  json built = invoke_json({"run", "--circuit", "grover", "--qubits", "4", "--target", "9"});
  json loaded = invoke_json({"run", "--circuit", "file:" + file.string()});
  for (auto* j : {&built, &loaded}) {
    j->erase("timing_ms");
    j->erase("circuit");
  }
  EXPECT_EQ(built, loaded);
}

TEST(CliRun, StateFileInput) {
  TempDir dir;
  const fs::path file = dir.path() / "state.json";
  std::ofstream(file) << state_to_json(CVector{0.0, 0.0, 1.0, 0.0}).dump();
  const json j = invoke_json({"run", "--circuit", "qft", "--qubits", "2", "--engine", "oracle",
                              "--input", "file:" + file.string()});
  const json k = invoke_json(
      {"run", "--circuit", "qft", "--qubits", "2", "--engine", "oracle", "--input", "2"});
  EXPECT_EQ(j["normalized"], k["normalized"]);
}

TEST(CliWaveform, GroverTargetChannelDominates) {
  TempDir dir;
  const json j = invoke_json({"waveform", "--circuit", "grover", "--qubits", "6", "--target", "0",
                              "--iterations", "6", "--out", dir.path().string()});
  ASSERT_EQ(j["files"].size(), 64U);
  const double top = peak(csv_column(dir.path() / "channel_00.csv", 1));
  EXPECT_NEAR(top, std::sqrt(0.9965856807867991), 1e-9);
  const double rest = peak(csv_column(dir.path() / "channel_01.csv", 1));
  for (int y = 1; y < 64; ++y) {
    char name[32];
    std::snprintf(name, sizeof name, "channel_%02d.csv", y);
    EXPECT_NEAR(peak(csv_column(dir.path() / name, 1)), rest, 1e-12) << name;
  }
  EXPECT_LT(rest, 0.01 * top);
}

TEST(CliWaveform, ZeroInputGivesZeroSignals) {
  TempDir dir;
  const fs::path state = dir.path() / "zero.json";
  std::ofstream(state) << state_to_json(CVector(8, 0.0)).dump();
  const fs::path out = dir.path() / "wave";
  fs::create_directories(out);
  invoke_json({"waveform", "--circuit", "qft", "--qubits", "3", "--input", "file:" + state.string(),
               "--out", out.string()});
  for (int y = 0; y < 8; ++y) {
    const fs::path f = out / ("channel_0" + std::to_string(y) + ".csv");
    EXPECT_EQ(peak(csv_column(f, 1)), 0.0);
    EXPECT_EQ(peak(csv_column(f, 2)), 0.0);
  }
}

TEST(CliWaveform, QftChannelsAreIdentical) {
  TempDir dir;
  invoke_json({"waveform", "--circuit", "qft", "--qubits", "6", "--out", dir.path().string(),
               "--wide"});
  std::ifstream first(dir.path() / "channel_00.csv");
  const std::string reference{std::istreambuf_iterator<char>(first), {}};
  for (int y = 1; y < 64; ++y) {
    char name[32];
    std::snprintf(name, sizeof name, "channel_%02d.csv", y);
    std::ifstream is(dir.path() / name);
    EXPECT_EQ(std::string(std::istreambuf_iterator<char>(is), {}), reference) << name;
  }
  EXPECT_TRUE(fs::exists(dir.path() / "channels.csv"));
}

TEST(CliWaveform, Errors) {
  TempDir dir;
  EXPECT_EQ(invoke({"waveform", "--circuit", "qft", "--qubits", "2", "--engine", "oracle", "--out",
                    dir.path().string()})
                .code,
            cli::kExitUsage);
  std::ofstream(dir.path() / "plain") << "not a directory";
  const Outcome blocked = invoke({"waveform", "--circuit", "qft", "--qubits", "2", "--out",
                                  (dir.path() / "plain" / "deeper").string()});
  EXPECT_NE(blocked.code, cli::kExitOk);
  EXPECT_FALSE(blocked.err.empty());
}

TEST(CliExitCodes, UsageAndEngineErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--circuit", "bell", "--qubits", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--circuit", "qft", "--qubits", "2", "--engine", "gpu"}).code,
            cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--circuit", "qft", "--qubits", "2", "--input", "4"}).code,
            cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--circuit", "grover", "--qubits", "2", "--target", "4"}).code,
            cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--circuit", "file:/nonexistent/c.json"}).code, cli::kExitUsage);
  const Outcome help = invoke({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("resources"), std::string::npos);
}

TEST(CliEnv, SampleCountOverride) {
  ::setenv("AQED_SAMPLES", "1024", 1);
  const json j = invoke_json({"run", "--circuit", "qft", "--qubits", "2", "--engine", "spectral"});
  EXPECT_EQ(j["samples_per_window"], 1024);
  for (double p : j["probabilities"].get<std::vector<double>>()) EXPECT_NEAR(p, 0.25, 1e-9);
  ::setenv("AQED_SAMPLES", "lots", 1);
  EXPECT_EQ(invoke({"run", "--circuit", "qft", "--qubits", "2"}).code, cli::kExitUsage);
  ::unsetenv("AQED_SAMPLES");
  EXPECT_EQ(invoke_json({"run", "--circuit", "qft", "--qubits", "2"})["samples_per_window"], 4096);
}

}  // namespace
}  // namespace aqed
