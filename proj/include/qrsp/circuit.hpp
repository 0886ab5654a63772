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

#include <stdexcept>
#include <vector>

#include "qrsp/gates.hpp"
#include "qrsp/state.hpp"

namespace qrsp {

// One gate on 1-based qubit labels. Two-qubit gates store control in q0 and
// target in q1; single-qubit gates leave q1 at 0.
struct Gate {
  enum class Kind { H, X, Z, CNOT };

  Kind kind;
  int q0 = 0;
  int q1 = 0;

  static Gate h(int q) { return {Kind::H, q, 0}; }
  static Gate x(int q) { return {Kind::X, q, 0}; }
  static Gate z(int q) { return {Kind::Z, q, 0}; }
  static Gate cnot(int control, int target) { return {Kind::CNOT, control, target}; }

  bool is_two_qubit() const { return kind == Kind::CNOT; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline void check_circuit(const Circuit& c) {
  check_qubit_count(c.n_qubits);
  for (const auto& g : c.gates) {
    if (g.q0 < 1 || g.q0 > c.n_qubits) throw std::out_of_range("gate qubit out of range");
    if (g.is_two_qubit()) {
      if (g.q1 < 1 || g.q1 > c.n_qubits) throw std::out_of_range("gate qubit out of range");
      if (g.q0 == g.q1) throw std::invalid_argument("control and target must differ");
    }
  }
}

inline StateVector run_circuit(const Circuit& c, const StateVector& initial) {
  check_circuit(c);
  if (initial.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("initial state does not match circuit width");
  }
  StateVector psi = initial;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H:
        psi = apply_operator(psi, gates::hadamard(), {g.q0});
        break;
      case Gate::Kind::X:
        psi = apply_operator(psi, gates::pauli_x(), {g.q0});
        break;
      case Gate::Kind::Z:
        psi = apply_operator(psi, gates::pauli_z(), {g.q0});
        break;
      case Gate::Kind::CNOT:
        psi = apply_operator(psi, gates::cnot(), {g.q0, g.q1});
        break;
    }
  }
  return psi;
}

inline StateVector run_circuit(const Circuit& c) {
  return run_circuit(c, StateVector(c.n_qubits));
}

// Entangling sequence whose output is the five-qubit cluster state
// (|00000> + |01011> + |10100> - |11111>) / 2.
inline Circuit build_cluster_circuit() {
  Circuit c;
  c.n_qubits = 5;
  c.gates = {
      Gate::h(1),
      Gate::cnot(1, 2),
      Gate::h(2),
      Gate::cnot(1, 3),
      Gate::cnot(2, 4),
      Gate::cnot(2, 5),
  };
  return c;
}

}  // namespace qrsp
