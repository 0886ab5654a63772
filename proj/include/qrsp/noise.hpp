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
#include <stdexcept>
#include <string>
#include <vector>

#include "qrsp/protocol.hpp"
#include "qrsp/state.hpp"

namespace qrsp {

enum class NoiseKind { AmplitudeDamping, PhaseFlip, BitFlip };

// How a noisy-output fidelity is reported. PaperUnnormalized feeds the channel
// the trace-4 input below and never renormalizes, matching the closed forms;
// TraceNormalized divides by the conditional output's trace.
enum class FidelityConvention { PaperUnnormalized, TraceNormalized };

inline std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
      return "amplitude-damping";
    case NoiseKind::PhaseFlip:
      return "phase-flip";
    case NoiseKind::BitFlip:
      return "bit-flip";
  }
  throw std::invalid_argument("unknown noise kind");
}

struct KrausChannel {
  NoiseKind kind;
  double rate;
  std::vector<Matrix> operators;
};

// Single-qubit channel at the given rate. Operators satisfy sum E^+ E = I.
inline KrausChannel kraus_channel(NoiseKind kind, double rate) {
  if (!(rate >= 0.0) || !(rate <= 1.0)) {
    throw std::invalid_argument("noise rate must lie in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - rate);
  const double flip = std::sqrt(rate);
  switch (kind) {
    case NoiseKind::AmplitudeDamping:
      return {kind, rate, {Matrix{{1, 0}, {0, keep}}, Matrix{{0, flip}, {0, 0}}}};
    case NoiseKind::PhaseFlip:
      return {kind, rate, {Matrix{{keep, 0}, {0, keep}}, Matrix{{flip, 0}, {0, -flip}}}};
    case NoiseKind::BitFlip:
      return {kind, rate, {Matrix{{keep, 0}, {0, keep}}, Matrix{{0, flip}, {flip, 0}}}};
  }
  throw std::invalid_argument("unknown noise kind");
}

// Independent local noise on the three receiver qubits (b1, c1, c2) of a
// five-qubit state: sum over Kraus triples of (E_l (x) E_m (x) E_n) rho (.)^+.
inline DensityMatrix apply_local_noise(const DensityMatrix& rho, const KrausChannel& on_b1,
                                       const KrausChannel& on_c1, const KrausChannel& on_c2) {
  if (rho.n_qubits() != 5) {
    throw std::invalid_argument("local noise expects the five-qubit state");
  }
  DensityMatrix out(5);
  for (const auto& e3 : on_b1.operators) {
    for (const auto& e4 : on_c1.operators) {
      const Matrix e34 = kron(e3, e4);
      for (const auto& e5 : on_c2.operators) {
        out += conjugate_with(rho, kron(e34, e5), {3, 4, 5});
      }
    }
  }
  return out;
}

inline DensityMatrix apply_local_noise(const DensityMatrix& rho, const KrausChannel& channel) {
  return apply_local_noise(rho, channel, channel, channel);
}

// Channel input with branch amplitudes 1 (trace 4): the analysis convention
// drops the cluster state's 1/2 normalization.
inline DensityMatrix unnormalized_channel_input() {
  return density_from_state(cluster_state(), 4.0);
}

// Noisy shared resource: the same channel applied to (b1, c1, c2) of the
// unnormalized input.
inline DensityMatrix noisy_cluster(NoiseKind kind, double rate) {
  return apply_local_noise(unnormalized_channel_input(), kraus_channel(kind, rate));
}

// Measurement-plus-recovery operator for one outcome: project (a1, a2) onto
// the outcome's basis vector, then apply the recovery on (b1) and (c1, c2).
inline Matrix outcome_operator(int outcome, const ProtocolParams& p) {
  const auto basis = measurement_basis(p);
  const StateVector& xi = basis.at(static_cast<std::size_t>(outcome - 1));
  Matrix proj(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      proj(r, c) = xi.amp(static_cast<std::size_t>(r)) * std::conj(xi.amp(static_cast<std::size_t>(c)));
    }
  }
  const CorrectionOps ops = correction_ops(outcome);
  const Matrix project_senders = embed_operator(proj, {1, 2}, 5);
  const Matrix recover = embed_operator(kron(ops.bob, ops.candy), {3, 4, 5}, 5);
  return recover * project_senders;
}

// Conditional (unrenormalized) receiver state: Tr_{a1, a2}( M rho M^+ ).
inline DensityMatrix apply_outcome_operator(const DensityMatrix& rho, const Matrix& m) {
  if (rho.n_qubits() != 5) {
    throw std::invalid_argument("outcome operator expects the five-qubit state");
  }
  const Matrix full = m * rho.entries() * m.adjoint();
  return partial_trace(DensityMatrix(5, full), {1, 2});
}

inline DensityMatrix conditional_output(const DensityMatrix& rho, int outcome,
                                        const ProtocolParams& p) {
  return apply_outcome_operator(rho, outcome_operator(outcome, p));
}

// Brute-force fidelity of one outcome's corrected output against the joint
// target, starting from an already-noisy five-qubit density.
inline double fidelity_noisy(const DensityMatrix& noisy_input, const ProtocolParams& p, int outcome,
                             FidelityConvention convention) {
  const DensityMatrix out = conditional_output(noisy_input, outcome, p);
  const double f = fidelity_pure(make_targets(p).joint, out);
  if (convention == FidelityConvention::TraceNormalized) {
    const double t = out.trace().real();
    if (t < 1e-300) return 0.0;
    return f / t;
  }
  return f;
}

inline double fidelity_noisy(const ProtocolParams& p, NoiseKind kind, double rate, int outcome,
                             FidelityConvention convention) {
  return fidelity_noisy(noisy_cluster(kind, rate), p, outcome, convention);
}

// Closed-form fidelity of outcome 2 in the unnormalized convention.
inline double closed_form_fidelity(NoiseKind kind, const ProtocolParams& p, double rate) {
  if (!(rate >= 0.0) || !(rate <= 1.0)) {
    throw std::invalid_argument("noise rate must lie in [0, 1]");
  }
  const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
  const double a2 = a * a, b2 = b * b, g2 = g * g, d2 = d * d;
  switch (kind) {
    case NoiseKind::AmplitudeDamping: {
      const double lam = rate;
      const double q = 1.0 - lam;
      const double sq = std::sqrt(q);
      const double sl = std::sqrt(lam);
      const double t1 = a2 * d2 + q * a2 * g2 + sq * b2 * d2 + q * sq * b2 * g2;
      const double t2 = lam * a2 * g * d + lam * sq * b2 * g * d;
      const double t3 = sl * a * b * d2 + q * sl * a * b * g2;
      const double t4 = lam * lam * lam * a2 * b2 * g2 * d2;
      return t1 * t1 + t2 * t2 + t3 * t3 + t4;
    }
    case NoiseKind::PhaseFlip: {
      const double mu = rate;
      const double q = 1.0 - mu;
      const double zz = (d2 - g2) * (d2 - g2);
      const double xx = (a2 - b2) * (a2 - b2);
      return (q * q * q + q * mu * mu) + 2.0 * q * q * mu * zz + (q * q * mu + mu * mu * mu) * xx +
             2.0 * q * mu * mu * xx * zz;
    }
    case NoiseKind::BitFlip: {
      const double nu = rate;
      const double q = 1.0 - nu;
      return q * q * q + 4.0 * nu * nu * q * g2 * d2 + 4.0 * q * q * nu * a2 * b2 +
             16.0 * nu * nu * nu * a2 * b2 * g2 * d2;
    }
  }
  throw std::invalid_argument("unknown noise kind");
}

// Outcome-averaged fidelity for the normalized shared state: each outcome
// contributes probability x normalized fidelity, which collapses to 1/4 of
// the unnormalized-convention sum. Equals 1 at rate 0.
inline double average_output_fidelity(const ProtocolParams& p, NoiseKind kind, double rate) {
  const DensityMatrix eps = noisy_cluster(kind, rate);
  double sum = 0.0;
  for (int outcome = 1; outcome <= 4; ++outcome) {
    sum += fidelity_noisy(eps, p, outcome, FidelityConvention::PaperUnnormalized);
  }
  return 0.25 * sum;
}

}  // namespace qrsp
