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

#include "aqed/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "aqed/circuit.hpp"
#include "aqed/engine.hpp"
#include "aqed/resources.hpp"
#include "aqed/state_io.hpp"
#include "json.hpp"

namespace aqed::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kSchemaVersion = 1;

// Bad flags or inputs detected before any engine work starts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CircuitFlags {
  std::string circuit;
  int qubits = 0;
  std::uint64_t target = 0;
  int iterations = 0;
  std::string input = "0";
  bool mixer = false;
  int mixer_phases = 0;
  std::string spatial_path = "strided";
};

void add_circuit_flags(CLI::App* sub, CircuitFlags& f) {
  sub->add_option("--circuit", f.circuit, "grover | qft | file:<path>")->required();
  sub->add_option("--qubits", f.qubits, "Register size (ignored for file: circuits)");
  sub->add_option("--target", f.target, "Grover search target (basis index)");
  sub->add_option("--iterations", f.iterations,
                  "Grover iterations (default round(pi/4 sqrt(2^n)))");
  sub->add_option("--input", f.input, "Initial basis index, or file:<path> to a state JSON");
  sub->add_flag("--mixer", f.mixer, "Spectral engine: comparator/square-wave mixing");
  sub->add_option("--mixer-phases", f.mixer_phases, "Staircase steps of the mixer (0 = auto)");
  sub->add_option("--spatial-path", f.spatial_path, "strided | dense")
      ->check(CLI::IsMember({"strided", "dense"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Circuit resolve_circuit(const CircuitFlags& f) {
  try {
    if (f.circuit.rfind("file:", 0) == 0) return circuit_from_json(parse_json_file(f.circuit.substr(5)));
    if (f.qubits < 1) throw UsageError("--qubits must be >= 1");
    if (f.circuit == "grover") {
      const int it = f.iterations > 0 ? f.iterations : default_grover_iterations(f.qubits);
      Circuit c = build_grover({f.qubits, f.target, it});
      c.label = "grover n=" + std::to_string(f.qubits) + " target=" + std::to_string(f.target) +
                " iterations=" + std::to_string(it);
      return c;
    }
    if (f.circuit == "qft") return build_qft(f.qubits);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown circuit '" + f.circuit + "' (expected grover, qft or file:<path>)");
}

CVector resolve_input(const CircuitFlags& f, int qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  try {
    if (f.input.rfind("file:", 0) == 0) {
      CVector v = state_from_json(parse_json_file(f.input.substr(5)));
      if (v.size() != dim) throw UsageError("input state size does not match the circuit");
      return v;
    }
    std::size_t pos = 0;
    const unsigned long long idx = std::stoull(f.input, &pos);
    if (pos != f.input.size()) throw UsageError("--input must be an integer or file:<path>");
    if (idx >= dim) throw UsageError("--input " + f.input + " out of range");
    CVector v(dim, 0.0);
    v[idx] = 1.0;
    return v;
  } catch (const std::logic_error& e) {  // stoull and InvalidArgument
    throw UsageError(std::string("bad --input: ") + e.what());
  }
}

SignalConfig signal_from_env() {
  const char* env = std::getenv("AQED_SAMPLES");
  if (env == nullptr || *env == '\0') return SignalConfig{};
  char* end = nullptr;
  const unsigned long long k = std::strtoull(env, &end, 10);
  if (*end != '\0' || k == 0) throw UsageError("AQED_SAMPLES must be a positive integer");
  try {
    return SignalConfig(SignalConfig::kDefaultOmega0, static_cast<std::size_t>(k));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("AQED_SAMPLES: ") + e.what());
  }
}

RunOptions make_options(const CircuitFlags& f, EngineKind engine) {
  RunOptions o;
  o.engine = engine;
  o.signal = signal_from_env();
  o.spectral.mode = f.mixer ? MultiplyMode::mixer : MultiplyMode::ideal;
  o.spectral.mixer_phases = f.mixer_phases;
  o.spatial_path = f.spatial_path == "dense" ? SpatialPath::dense : SpatialPath::strided;
  return o;
}

EngineKind resolve_engine(const std::string& name) {
  const auto e = parse_engine_name(name);
  if (!e) throw UsageError("unknown engine '" + name + "'");
  return *e;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw EngineError("cannot write '" + path + "'");
  os << text;
  if (!os) throw EngineError("write to '" + path + "' failed");
}

json run_header(const char* command, const Circuit& c, const RunOptions& o) {
  json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["circuit"] = c.label;
  j["qubits"] = c.qubits;
  j["operations"] = c.ops.size();
  j["mode"] = o.spectral.mode == MultiplyMode::mixer ? "mixer" : "ideal";
  j["samples_per_window"] = o.signal.samples_per_window();
  return j;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- run -------------------------------------------------------------------

struct RunFlags {
  CircuitFlags circuit;
  std::string engine = "spatial";
  std::string out;
  bool trace = false;
};

void cmd_run(const RunFlags& f, std::ostream& out) {
  const Circuit c = resolve_circuit(f.circuit);
  const CVector initial = resolve_input(f.circuit, c.qubits);
  RunOptions o = make_options(f.circuit, resolve_engine(f.engine));
  o.trace = f.trace;

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult r = run_circuit(c, initial, o);
  const double ms = elapsed_ms(t0);

  json j = run_header("run", c, o);
  j["engine"] = engine_name(r.engine);
  j["scale"] = r.scale;
  j["amplitudes"] = complex_to_json(r.raw);
  j["normalized"] = complex_to_json(r.normalized);
  j["probabilities"] = r.probabilities;
  j["most_likely"] = std::distance(
      r.probabilities.begin(), std::max_element(r.probabilities.begin(), r.probabilities.end()));
  if (f.trace) {
    json steps = json::array();
    for (const auto& s : r.trace) {
      steps.push_back({{"op", s.op_index},
                       {"gate", gate_name(c.ops[s.op_index].kind)},
                       {"scale", s.scale},
                       {"amplitudes", complex_to_json(s.amplitudes)}});
    }
    j["trace"] = std::move(steps);
  }
  j["timing_ms"] = ms;
  const std::string text = j.dump(2) + "\n";
  if (!f.out.empty()) write_text(f.out, text);
  out << text;
}

// ---- compare ---------------------------------------------------------------

struct CompareFlags {
  CircuitFlags circuit;
  std::string engine_a = "spatial";
  std::string engine_b = "oracle";
};

void cmd_compare(const CompareFlags& f, std::ostream& out) {
  const Circuit c = resolve_circuit(f.circuit);
  const CVector initial = resolve_input(f.circuit, c.qubits);
  const RunOptions oa = make_options(f.circuit, resolve_engine(f.engine_a));
  const RunOptions ob = make_options(f.circuit, resolve_engine(f.engine_b));

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult a = run_circuit(c, initial, oa);
  const RunResult b = run_circuit(c, initial, ob);
  const double ms = elapsed_ms(t0);

  double prob_dev = 0.0;
  for (std::size_t i = 0; i < a.probabilities.size(); ++i) {
    prob_dev = std::max(prob_dev, std::abs(a.probabilities[i] - b.probabilities[i]));
  }
  json j = run_header("compare", c, oa);
  j["engine_a"] = engine_name(a.engine);
  j["engine_b"] = engine_name(b.engine);
  j["max_abs_deviation"] = max_abs_diff(a.normalized, b.normalized);
  j["max_rel_deviation"] = max_rel_diff(a.normalized, b.normalized);
  j["max_probability_deviation"] = prob_dev;
  j["timing_ms"] = ms;
  out << j.dump(2) << "\n";
}

// ---- resources -------------------------------------------------------------

struct ResourceFlags {
  std::string encoding = "all";
  std::string qubits = "1..6";
  std::string format = "table";
  bool stages = false;
};

std::pair<int, int> parse_range(const std::string& spec) {
  auto to_int = [&](const std::string& text) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (text.empty() || pos != text.size()) {
      throw UsageError("--qubits must look like A..B, got '" + spec + "'");
    }
    return v;
  };
  const auto dots = spec.find("..");
  const int lo = to_int(dots == std::string::npos ? spec : spec.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : to_int(spec.substr(dots + 2));
  if (lo > hi) throw UsageError("--qubits range '" + spec + "' is empty");
  if (lo < 1 || hi > 30) throw UsageError("--qubits range must lie within 1..30");
  return {lo, hi};
}

std::string_view encoding_label(EncodingKind k) {
  switch (k) {
    case EncodingKind::frequency_recursive: return "Frequency-R";
    case EncodingKind::frequency_parallel: return "Frequency-P";
    case EncodingKind::spatial: return "Spatial";
  }
  return "?";
}

struct ResourceRow {
  EncodingKind kind;
  int n;
  std::string stage;
  long long mults;
  long long adds;
  long long opamps;
};

void cmd_resources(const ResourceFlags& f, std::ostream& out) {
  std::vector<EncodingKind> kinds;
  if (f.encoding == "all") {
    kinds.assign(kAllEncodings.begin(), kAllEncodings.end());
  } else if (const auto k = parse_encoding_name(f.encoding)) {
    kinds.push_back(*k);
  } else {
    throw UsageError("unknown encoding '" + f.encoding + "'");
  }
  const auto [lo, hi] = parse_range(f.qubits);

  std::vector<ResourceRow> rows;
  for (int n = lo; n <= hi; ++n) {
    for (EncodingKind k : kinds) {
      const ResourceReport r = stage_breakdown(k, n);
      if (f.stages) {
        for (const auto& s : r.stages) {
          rows.push_back({k, n, std::string(stage_name(s.stage)), s.multiplications, s.additions,
                          s.opamps});
        }
      }
      rows.push_back({k, n, "total", r.total_multiplications, r.total_additions, r.total_opamps});
    }
  }

  if (f.format == "csv") {
    out << "kind,n,stage,mults,adds,opamps\n";
    for (const auto& r : rows) {
      out << encoding_name(r.kind) << ',' << r.n << ',' << r.stage << ',' << r.mults << ','
          << r.adds << ',' << r.opamps << '\n';
    }
  } else if (f.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"kind", encoding_name(r.kind)},
                     {"n", r.n},
                     {"stage", r.stage},
                     {"mults", r.mults},
                     {"adds", r.adds},
                     {"opamps", r.opamps}});
    }
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "resources";
    j["rows"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    const bool stage_col = f.stages;
    out << std::left << std::setw(4) << "n" << std::setw(13) << "Type";
    if (stage_col) out << std::setw(15) << "Stage";
    out << std::right << std::setw(16) << "Multiplications" << std::setw(11) << "Additions"
        << std::setw(8) << "Opamps" << '\n';
    for (const auto& r : rows) {
      out << std::left << std::setw(4) << r.n << std::setw(13) << encoding_label(r.kind);
      if (stage_col) out << std::setw(15) << r.stage;
      out << std::right << std::setw(16) << r.mults << std::setw(11) << r.adds << std::setw(8)
          << r.opamps << '\n';
    }
  }
}

// ---- waveform --------------------------------------------------------------

struct WaveformFlags {
  CircuitFlags circuit;
  std::string engine = "spatial";
  std::string out;
  bool wide = false;
  bool raw = false;
};

void cmd_waveform(const WaveformFlags& f, std::ostream& out) {
  const Circuit c = resolve_circuit(f.circuit);
  const CVector initial = resolve_input(f.circuit, c.qubits);
  const RunOptions o = make_options(f.circuit, resolve_engine(f.engine));
  const fs::path dir(f.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw EngineError("cannot create directory '" + f.out + "'");

  double scale = 1.0;
  std::vector<std::string> files;
  auto emit = [&](const std::string& name, const SampledSignal& s) {
    std::ostringstream ss;
    write_csv(s, ss);
    write_text((dir / name).string(), ss.str());
    files.push_back(name);
  };

  switch (o.engine) {
    case EngineKind::spatial: {
      SpatialState state = run_spatial_state(c, initial, o, &scale);
      if (!f.raw) {
        for (auto& a : state.amplitudes) a /= scale;
      }
      const std::size_t channels = state.channels();
      const int width = std::max<int>(2, static_cast<int>(std::to_string(channels - 1).size()));
      std::vector<SampledSignal> signals;
      std::vector<std::string> names;
      for (std::size_t y = 0; y < channels; ++y) {
        std::ostringstream name;
        name << "channel_" << std::setw(width) << std::setfill('0') << y;
        SampledSignal s = state.channel(y);
        emit(name.str() + ".csv", s);
        if (f.wide) {
          signals.push_back(std::move(s));
          names.push_back(name.str());
        }
      }
      if (f.wide) {
        std::ostringstream ss;
        write_wide_csv(signals, names, ss);
        write_text((dir / "channels.csv").string(), ss.str());
        files.push_back("channels.csv");
      }
      break;
    }
    case EngineKind::spectral: {
      SpectralState state = run_spectral_state(c, initial, o, &scale);
      if (!f.raw) state.signal *= Complex(1.0 / scale);
      emit("spectral.csv", state.signal);
      break;
    }
    case EngineKind::oracle:
      throw UsageError("the oracle engine has no waveform; use spatial or spectral");
  }

  json j = run_header("waveform", c, o);
  j["engine"] = engine_name(o.engine);
  j["scale"] = scale;
  j["normalized"] = !f.raw;
  j["directory"] = f.out;
  j["files"] = files;
  out << j.dump(2) << "\n";
}

// ---- emit ------------------------------------------------------------------

struct EmitFlags {
  CircuitFlags circuit;
  std::string out;
};

void cmd_emit(const EmitFlags& f, std::ostream& out) {
  const Circuit c = resolve_circuit(f.circuit);
  const std::string text = circuit_to_json(c).dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    write_text(f.out, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analog quantum emulation: spectral and spatial signal engines", "aqed"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Run a circuit on one engine and print JSON");
  add_circuit_flags(run_cmd, run_flags.circuit);
  run_cmd->add_option("--engine", run_flags.engine, "spatial | spectral | oracle");
  run_cmd->add_option("--out", run_flags.out, "Also write the JSON to this file");
  run_cmd->add_flag("--trace", run_flags.trace, "Include per-operation amplitudes");

  CompareFlags cmp_flags;
  auto* cmp_cmd = app.add_subcommand("compare", "Run a circuit on two engines and report deviation");
  add_circuit_flags(cmp_cmd, cmp_flags.circuit);
  cmp_cmd->add_option("--engine-a", cmp_flags.engine_a, "spatial | spectral | oracle");
  cmp_cmd->add_option("--engine-b", cmp_flags.engine_b, "Reference engine");

  ResourceFlags res_flags;
  auto* res_cmd = app.add_subcommand("resources", "Print the closed-form resource model");
  res_cmd->add_option("--encoding", res_flags.encoding,
                      "frequency-recursive | frequency-parallel | spatial | all");
  res_cmd->add_option("--qubits", res_flags.qubits, "Range A..B (or a single n)");
  res_cmd->add_option("--format", res_flags.format, "csv | json | table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  res_cmd->add_flag("--stages", res_flags.stages, "Per-stage rows in addition to totals");

  WaveformFlags wave_flags;
  auto* wave_cmd = app.add_subcommand("waveform", "Write the final state's signals as CSV");
  add_circuit_flags(wave_cmd, wave_flags.circuit);
  wave_cmd->add_option("--engine", wave_flags.engine, "spatial | spectral");
  wave_cmd->add_option("--out", wave_flags.out, "Output directory")->required();
  wave_cmd->add_flag("--wide", wave_flags.wide, "Also write every channel into channels.csv");
  wave_cmd->add_flag("--raw", wave_flags.raw, "Keep the unnormalized-Hadamard scale");

  EmitFlags emit_flags;
  auto* emit_cmd = app.add_subcommand("emit", "Write a built circuit as JSON");
  add_circuit_flags(emit_cmd, emit_flags.circuit);
  emit_cmd->add_option("--out", emit_flags.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) cmd_run(run_flags, out);
    if (cmp_cmd->parsed()) cmd_compare(cmp_flags, out);
    if (res_cmd->parsed()) cmd_resources(res_flags, out);
    if (wave_cmd->parsed()) cmd_waveform(wave_flags, out);
    if (emit_cmd->parsed()) cmd_emit(emit_flags, out);
  } catch (const UsageError& e) {
    err << "aqed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "aqed: " << e.what() << "\n";
    return kExitEngine;
  }
  return kExitOk;
}

}  // namespace aqed::cli
