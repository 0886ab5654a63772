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

#include <cmath>

#include "qrsp/linalg.hpp"

namespace qrsp::gates {

inline Matrix identity2() { return Matrix::identity(2); }

inline Matrix pauli_x() { return Matrix{{0, 1}, {1, 0}}; }

inline Matrix pauli_z() { return Matrix{{1, 0}, {0, -1}}; }

// sigma_x sigma_z as a single correction (sigma_z acts first): |0> -> |1>,
// |1> -> -|0>.
inline Matrix pauli_xz() { return Matrix{{0, -1}, {1, 0}}; }

inline Matrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Matrix{{s, s}, {s, -s}};
}

// Basis order |control target>.
inline Matrix cnot() {
  return Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

}  // namespace qrsp::gates
