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

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

#include "qrsp/circuit.hpp"
#include "qrsp/gates.hpp"
#include "qrsp/state.hpp"

namespace qrsp {

// Real coefficients of the two target states: alpha|0> + beta|1> for the
// single-qubit receiver and gamma|00> + delta|11> for the two-qubit receiver.
// Coefficients live in [-1, 1]; each pair squares to 1. Degenerate corners
// (a coefficient equal to 0 or 1) are legal and need no special-casing.
struct ProtocolParams {
  double alpha;
  double beta;
  double gamma;
  double delta;

  ProtocolParams(double a, double b, double g, double d) : alpha(a), beta(b), gamma(g), delta(d) {
    for (double v : {a, b, g, d}) {
      if (!std::isfinite(v) || std::abs(v) > 1.0 + kStepTol) {
        throw std::invalid_argument("coefficients must lie in [-1, 1]");
      }
    }
    if (std::abs(a * a + b * b - 1.0) > kStepTol || std::abs(g * g + d * d - 1.0) > kStepTol) {
      throw std::invalid_argument("coefficient pairs must square to 1");
    }
  }

  // Positive roots of probability inputs.
  static ProtocolParams from_squares(double alpha2, double gamma2) {
    if (!(alpha2 >= 0.0) || !(alpha2 <= 1.0) || !(gamma2 >= 0.0) || !(gamma2 <= 1.0)) {
      throw std::invalid_argument("squared coefficients must lie in [0, 1]");
    }
    return ProtocolParams(std::sqrt(alpha2), std::sqrt(1.0 - alpha2), std::sqrt(gamma2),
                          std::sqrt(1.0 - gamma2));
  }
};

struct Targets {
  StateVector bob;    // alpha|0> + beta|1>
  StateVector candy;  // gamma|00> + delta|11>
  StateVector joint;  // bob (x) candy
};

inline Targets make_targets(const ProtocolParams& p) {
  StateVector bob(1, {p.alpha, p.beta});
  StateVector candy(2, {p.gamma, 0.0, 0.0, p.delta});
  StateVector joint = tensor(bob, candy);
  return Targets{std::move(bob), std::move(candy), std::move(joint)};
}

// The shared five-qubit cluster state
// (|00000> + |01011> + |10100> - |11111>) / 2 on qubits (a1, a2, b1, c1, c2).
inline StateVector cluster_state() {
  StateVector phi(5, std::vector<cplx>(32, cplx{}));
  phi.amp(0b00000) = 0.5;
  phi.amp(0b01011) = 0.5;
  phi.amp(0b10100) = 0.5;
  phi.amp(0b11111) = -0.5;
  return phi;
}

// The orthonormal two-qubit basis the sender measures (a1, a2) in. Outcome i
// corresponds to vectors[i - 1].
inline std::array<StateVector, 4> measurement_basis(const ProtocolParams& p) {
  const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
  return {
      StateVector(2, {a * g, a * d, b * g, -b * d}),
      StateVector(2, {a * d, -a * g, -b * d, -b * g}),
      StateVector(2, {b * g, b * d, -a * g, a * d}),
      StateVector(2, {b * d, -b * g, a * d, a * g}),
  };
}

struct CorrectionOps {
  Matrix bob;    // 2x2, acts on b1
  Matrix candy;  // 4x4, acts on (c1, c2)
};

// Local recovery operations per measurement outcome. Outcomes 2 and 4 flip
// c1 and apply the combined x-after-z rotation to c2.
inline CorrectionOps correction_ops(int outcome) {
  const Matrix id2 = gates::identity2();
  const Matrix id4 = Matrix::identity(4);
  const Matrix flip_pair = kron(gates::pauli_x(), gates::pauli_xz());
  switch (outcome) {
    case 1:
      return {id2, id4};
    case 2:
      return {gates::pauli_z(), flip_pair};
    case 3:
      return {gates::pauli_xz(), id4};
    case 4:
      return {gates::pauli_x(), flip_pair};
    default:
      throw std::out_of_range("outcome must be 1..4");
  }
}

// Splits psi into (first qubit) (x) (remaining qubits), or throws if psi is
// entangled across that cut. The first factor's phase follows its dominant
// column of the 2 x (dim/2) coefficient matrix.
inline std::pair<StateVector, StateVector> factor_first_qubit(const StateVector& psi) {
  if (psi.n_qubits() < 2) throw std::invalid_argument("need at least two qubits to factor");
  const std::size_t half = psi.dim() / 2;

  std::size_t best = 0;
  double best_w = -1.0;
  for (std::size_t j = 0; j < half; ++j) {
    const double w = std::norm(psi.amp(j)) + std::norm(psi.amp(half + j));
    if (w > best_w) {
      best_w = w;
      best = j;
    }
  }
  if (best_w < 1e-300) throw std::invalid_argument("cannot factor a zero state");

  StateVector first(1, {psi.amp(best), psi.amp(half + best)});
  first = first.normalized();
  std::vector<cplx> rest(half);
  for (std::size_t j = 0; j < half; ++j) {
    rest[j] = std::conj(first.amp(0)) * psi.amp(j) + std::conj(first.amp(1)) * psi.amp(half + j);
  }
  StateVector second(psi.n_qubits() - 1, std::move(rest));

  const StateVector rebuilt = tensor(first, second);
  double err = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    err = std::max(err, std::abs(rebuilt.amp(i) - psi.amp(i)));
  }
  if (err > kPipelineTol) {
    throw std::runtime_error("state is entangled across the first-qubit cut");
  }
  return {std::move(first), std::move(second)};
}

struct OutcomeRecord {
  int outcome;                      // 1..4
  double probability;               // ideally exactly 1/4
  StateVector bob_state;            // corrected single-qubit output
  StateVector candy_state;          // corrected two-qubit output
  double post_correction_fidelity;  // |<target|corrected>|^2
};

// Noise-free protocol run: project (a1, a2) onto each basis vector, apply the
// outcome's recovery operations to (b1, c1, c2), and compare with the target.
inline std::array<OutcomeRecord, 4> run_ideal(const ProtocolParams& p) {
  const StateVector phi = cluster_state();
  const Targets targets = make_targets(p);
  const auto basis = measurement_basis(p);

  auto run_one = [&](int outcome) {
    const StateVector& xi = basis[static_cast<std::size_t>(outcome - 1)];
    std::vector<cplx> residual(8, cplx{});
    for (std::size_t k = 0; k < 4; ++k) {
      const cplx w = std::conj(xi.amp(k));
      if (w == cplx{}) continue;
      for (std::size_t j = 0; j < 8; ++j) residual[j] += w * phi.amp(k * 8 + j);
    }
    StateVector rest(3, std::move(residual));
    const double nrm = rest.norm();
    const double probability = nrm * nrm;
    rest = rest.normalized();

    const CorrectionOps ops = correction_ops(outcome);
    StateVector corrected = apply_operator(rest, ops.bob, {1});
    corrected = apply_operator(corrected, ops.candy, {2, 3});

    const double fid = std::norm(targets.joint.inner(corrected));
    auto [bob, candy] = factor_first_qubit(corrected);
    return OutcomeRecord{outcome, probability, std::move(bob), std::move(candy), fid};
  };

  return {run_one(1), run_one(2), run_one(3), run_one(4)};
}

// Deterministic outcome draw: the seed fixes the result across platforms.
inline int sample_outcome(const std::array<double, 4>& probabilities, std::uint64_t seed) {
  double total = 0.0;
  for (double p : probabilities) {
    if (p < 0.0) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");

  std::mt19937_64 rng(seed);
  // Top 53 bits give a uniform double in [0, 1) with no distribution-object
  // portability concerns.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    acc += probabilities[static_cast<std::size_t>(i)];
    if (u < acc) return i + 1;
  }
  return 4;
}

}  // namespace qrsp
