// Copyright 2026 The qrsp authors
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

#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qrsp/circuit.hpp"

namespace qrsp {

class QasmParseError : public std::runtime_error {
 public:
  QasmParseError(int line, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line) + ": " + what_arg) {}
};

// Canonical OpenQASM 2.0 serialization. Register slot q[k-1] carries the
// 1-based qubit label k; output always ends with a newline.
inline std::string export_qasm(const Circuit& c) {
  check_circuit(c);
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "// 1-based qubit label k maps to q[k-1]\n";
  out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H:
        out += "h q[" + std::to_string(g.q0 - 1) + "];\n";
        break;
      case Gate::Kind::X:
        out += "x q[" + std::to_string(g.q0 - 1) + "];\n";
        break;
      case Gate::Kind::Z:
        out += "z q[" + std::to_string(g.q0 - 1) + "];\n";
        break;
      case Gate::Kind::CNOT:
        out += "cx q[" + std::to_string(g.q0 - 1) + "],q[" + std::to_string(g.q1 - 1) + "];\n";
        break;
    }
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Parses "name[index]" against a known register name.
inline int parse_operand(std::string_view tok, const std::string& reg, int n_qubits, int line) {
  tok = trim(tok);
  const std::size_t open = tok.find('[');
  if (open == std::string_view::npos || tok.back() != ']') {
    throw QasmParseError(line, "malformed operand '" + std::string(tok) + "'");
  }
  if (std::string_view(tok.data(), open) != reg) {
    throw QasmParseError(line, "unknown register in operand '" + std::string(tok) + "'");
  }
  const std::string_view digits = tok.substr(open + 1, tok.size() - open - 2);
  if (digits.empty()) throw QasmParseError(line, "missing qubit index");
  int idx = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw QasmParseError(line, "malformed qubit index");
    idx = idx * 10 + (ch - '0');
    if (idx > kMaxQubits) break;
  }
  if (idx >= n_qubits) throw QasmParseError(line, "qubit index out of range");
  return idx + 1;  // back to 1-based labels
}

}  // namespace detail

// Strict line-oriented parser for the subset emitted by export_qasm. Blank lines
// and "//" comments are skipped; everything else must appear in order:
// version, include, one qreg, then h/x/z/cx statements.
inline Circuit parse_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  enum class Stage { Version, Include, Qreg, Gates } stage = Stage::Version;
  Circuit c;
  std::string reg;

  while (std::getline(in, raw)) {
    ++line;
    const std::string_view sv = detail::trim(raw);
    if (sv.empty() || sv.substr(0, 2) == "//") continue;
    if (sv.back() != ';') throw QasmParseError(line, "missing ';'");
    const std::string_view body = detail::trim(sv.substr(0, sv.size() - 1));

    switch (stage) {
      case Stage::Version:
        if (body != "OPENQASM 2.0") {
          throw QasmParseError(line, "expected 'OPENQASM 2.0;'");
        }
        stage = Stage::Include;
        continue;
      case Stage::Include:
        if (body != "include \"qelib1.inc\"") {
          throw QasmParseError(line, "expected 'include \"qelib1.inc\";'");
        }
        stage = Stage::Qreg;
        continue;
      case Stage::Qreg: {
        if (body.substr(0, 5) != "qreg ") throw QasmParseError(line, "expected qreg declaration");
        const std::string_view decl = detail::trim(body.substr(5));
        const std::size_t open = decl.find('[');
        if (open == std::string_view::npos || open == 0 || decl.back() != ']') {
          throw QasmParseError(line, "malformed qreg declaration");
        }
        reg = std::string(decl.substr(0, open));
        const std::string_view digits = decl.substr(open + 1, decl.size() - open - 2);
        if (digits.empty() || digits.size() > 1 || digits[0] < '1' || digits[0] > '5') {
          throw QasmParseError(line, "register size must be between 1 and 5");
        }
        c.n_qubits = digits[0] - '0';
        stage = Stage::Gates;
        continue;
      }
      case Stage::Gates:
        break;
    }

    const std::size_t sp = body.find(' ');
    if (sp == std::string_view::npos) throw QasmParseError(line, "malformed statement");
    const std::string_view name = body.substr(0, sp);
    const std::string_view args = body.substr(sp + 1);

    if (name == "h" || name == "x" || name == "z") {
      if (args.find(',') != std::string_view::npos) {
        throw QasmParseError(line, "single-qubit gate takes one operand");
      }
      const int q = detail::parse_operand(args, reg, c.n_qubits, line);
      if (name == "h") c.gates.push_back(Gate::h(q));
      if (name == "x") c.gates.push_back(Gate::x(q));
      if (name == "z") c.gates.push_back(Gate::z(q));
    } else if (name == "cx") {
      const std::size_t comma = args.find(',');
      if (comma == std::string_view::npos || args.find(',', comma + 1) != std::string_view::npos) {
        throw QasmParseError(line, "cx takes exactly two operands");
      }
      const int a = detail::parse_operand(args.substr(0, comma), reg, c.n_qubits, line);
      const int b = detail::parse_operand(args.substr(comma + 1), reg, c.n_qubits, line);
      if (a == b) throw QasmParseError(line, "control and target must differ");
      c.gates.push_back(Gate::cnot(a, b));
    } else {
      throw QasmParseError(line, "unknown gate '" + std::string(name) + "'");
    }
  }

  if (stage != Stage::Gates) throw QasmParseError(line, "missing qreg declaration");
  return c;
}

}  // namespace qrsp
