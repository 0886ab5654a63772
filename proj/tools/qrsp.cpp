// Copyright 2026 The qrsp authors
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

// Command-line front end. Exit codes: 0 success, 2 invalid arguments or
// malformed input, 3 file I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrsp/qrsp.hpp"

namespace {

qrsp::NoiseKind parse_kind(const std::string& s) {
  if (s == "ad") return qrsp::NoiseKind::AmplitudeDamping;
  if (s == "pf") return qrsp::NoiseKind::PhaseFlip;
  if (s == "bf") return qrsp::NoiseKind::BitFlip;
  throw std::invalid_argument("unknown noise kind '" + s + "' (expected ad, pf, or bf)");
}

// Writes text to path, returning the process exit code.
int write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 3;
  }
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing '" << path << "'\n";
    return 3;
  }
  return 0;
}

qrsp::SweepAxis parse_axis(const std::string& s) {
  std::istringstream in(s);
  std::string name, min_s, max_s, steps_s;
  if (!std::getline(in, name, ':') || !std::getline(in, min_s, ':') ||
      !std::getline(in, max_s, ':') || !std::getline(in, steps_s) || name.empty()) {
    throw std::invalid_argument("axis '" + s + "' is not of the form name:min:max:steps");
  }
  qrsp::SweepAxis ax;
  ax.name = name;
  try {
    ax.min = std::stod(min_s);
    ax.max = std::stod(max_s);
    ax.steps = std::stoi(steps_s);
  } catch (const std::exception&) {
    throw std::invalid_argument("axis '" + s + "' has non-numeric fields");
  }
  return ax;
}

std::pair<std::string, double> parse_fix(const std::string& s) {
  const std::size_t eq = s.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("fixed value '" + s + "' is not of the form name=value");
  }
  try {
    return {s.substr(0, eq), std::stod(s.substr(eq + 1))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("fixed value '" + s + "' has a non-numeric value");
  }
}

struct RunArgs {
  double alpha2 = 0.0;
  double gamma2 = 0.0;
  std::string noise = "ad";
  double rate = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  std::string out_path;
};

int do_run(const RunArgs& a) {
  const qrsp::ProtocolParams p = qrsp::ProtocolParams::from_squares(a.alpha2, a.gamma2);
  qrsp::ReportOptions opt;
  opt.with_timestamp = !a.no_timestamp;
  opt.samples = a.samples;
  opt.seed = a.seed;
  const auto report = qrsp::make_run_report(p, parse_kind(a.noise), a.rate, opt);
  const std::string text = report.dump(2) + "\n";
  if (a.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  return write_text(a.out_path, text);
}

struct SweepArgs {
  std::string preset;
  std::string noise = "ad";
  std::vector<std::string> axes;
  std::vector<std::string> fixes;
  std::string out_path;
};

int do_sweep(const SweepArgs& a) {
  qrsp::SweepSpec spec;
  if (!a.preset.empty()) {
    if (!a.axes.empty() || !a.fixes.empty()) {
      throw std::invalid_argument("--preset cannot be combined with --axis/--fix");
    }
    spec = qrsp::preset_sweep(a.preset);
  } else {
    spec.kind = parse_kind(a.noise);
    for (const auto& s : a.axes) spec.axes.push_back(parse_axis(s));
    for (const auto& s : a.fixes) {
      const auto [name, value] = parse_fix(s);
      if (!spec.fixed.emplace(name, value).second) {
        throw std::invalid_argument("fixed quantity '" + name + "' given twice");
      }
    }
  }
  qrsp::validate(spec);  // argument problems exit 2 before any file is touched

  if (a.out_path.empty() || a.out_path == "-") {
    qrsp::run_sweep(spec, std::cout);
    return 0;
  }
  std::ofstream out(a.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << a.out_path << "' for writing\n";
    return 3;
  }
  qrsp::run_sweep(spec, out);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing '" << a.out_path << "'\n";
    return 3;
  }
  return 0;
}

struct QasmArgs {
  std::string out_path = "cluster.qasm";
  bool to_stdout = false;
  std::string check_path;
};

int do_qasm(const QasmArgs& a) {
  if (!a.check_path.empty()) {
    std::ifstream in(a.check_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << a.check_path << "' for reading\n";
      return 3;
    }
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const qrsp::Circuit c = qrsp::parse_qasm(text);
    std::cout << "ok: " << c.n_qubits << " qubits, " << c.gates.size() << " gates\n";
    return 0;
  }
  const std::string text = qrsp::export_qasm(qrsp::build_cluster_circuit());
  if (a.to_stdout) {
    std::cout << text;
    return 0;
  }
  return write_text(a.out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five-qubit cluster-state dual remote state preparation toolkit"};
  app.set_version_flag("--version", QRSP_VERSION);
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Evaluate one noisy protocol setting; JSON on stdout");
  run->add_option("--alpha2", run_args.alpha2, "Weight of |0> in the single-qubit target, in [0,1]")
      ->required();
  run->add_option("--gamma2", run_args.gamma2, "Weight of |00> in the two-qubit target, in [0,1]")
      ->required();
  run->add_option("--noise", run_args.noise, "Noise kind: ad, pf, or bf")
      ->check(CLI::IsMember({"ad", "pf", "bf"}));
  run->add_option("--rate", run_args.rate, "Noise rate in [0,1] (default 0)");
  run->add_option("--samples", run_args.samples, "Also draw this many measurement outcomes")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--seed", run_args.seed, "Base seed for outcome sampling");
  run->add_flag("--no-timestamp", run_args.no_timestamp, "Omit the timestamp for byte-stable output");
  run->add_option("--out", run_args.out_path, "Write the JSON report to this file instead");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Scan fidelity over parameter grids as CSV");
  sweep->add_option("--preset", sweep_args.preset, "Canned scan, one of fig{3,4,5}{a,b,c,d}")
      ->check(CLI::IsMember(qrsp::preset_names()));
  sweep->add_option("--noise", sweep_args.noise, "Noise kind for hand-built scans: ad, pf, or bf")
      ->check(CLI::IsMember({"ad", "pf", "bf"}));
  sweep->add_option("--axis", sweep_args.axes,
                    "Swept quantity as name:min:max:steps with name in "
                    "{alpha2, gamma2, rate}; repeat for a second axis");
  sweep->add_option("--fix", sweep_args.fixes,
                    "Pin a quantity as name=value; every quantity must be swept or pinned");
  sweep->add_option("--out", sweep_args.out_path, "Output CSV path ('-' or empty for stdout)");

  QasmArgs qasm_args;
  CLI::App* qasm = app.add_subcommand("qasm", "Export the state-preparation circuit as OpenQASM 2.0");
  qasm->add_option("--out", qasm_args.out_path, "Output path (default cluster.qasm)");
  qasm->add_flag("--stdout", qasm_args.to_stdout, "Print the QASM bytes instead of writing a file");
  qasm->add_option("--check", qasm_args.check_path,
                   "Parse this QASM file and report its size instead of exporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return do_run(run_args);
    if (sweep->parsed()) return do_sweep(sweep_args);
    return do_qasm(qasm_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // Covers malformed QASM input; anything else here is still bad input.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
