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
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qrsp/linalg.hpp"

namespace qrsp {

// The library targets desk-scale systems; five qubits is the hard cap.
inline constexpr int kMaxQubits = 5;

// Qubit labels are 1-based. Qubit 1 owns the most significant bit of a basis
// index, so for five qubits |q1 q2 q3 q4 q5> = |b4 b3 b2 b1 b0>.
inline void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be between 1 and 5");
  }
}

inline void check_qubit_labels(const std::vector<int>& qubits, int n_qubits) {
  if (qubits.empty()) throw std::invalid_argument("empty qubit list");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 1 || qubits[i] > n_qubits) {
      throw std::out_of_range("qubit label out of range");
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("duplicate qubit label");
      }
    }
  }
}

// Pure state on up to five qubits. Amplitudes are not required to be
// normalized; projection residuals and scaled branches are first-class values.
class StateVector {
 public:
  explicit StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, cplx{});
    amps_[0] = 1.0;
  }

  StateVector(int n_qubits, std::vector<cplx> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
      throw std::invalid_argument("amplitude count must be 2^n");
    }
  }

  static StateVector basis(int n_qubits, std::uint32_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw std::out_of_range("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  cplx& amp(std::size_t i) { return amps_.at(i); }
  const cplx& amp(std::size_t i) const { return amps_.at(i); }
  const std::vector<cplx>& amps() const { return amps_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  StateVector normalized() const {
    const double n = norm();
    if (n < 1e-300) throw std::invalid_argument("cannot normalize a zero state");
    StateVector r = *this;
    for (auto& a : r.amps_) a /= n;
    return r;
  }

  StateVector scaled(cplx factor) const {
    StateVector r = *this;
    for (auto& a : r.amps_) a *= factor;
    return r;
  }

  // <this|other>
  cplx inner(const StateVector& other) const {
    if (n_qubits_ != other.n_qubits_) {
      throw std::invalid_argument("inner product dimension mismatch");
    }
    cplx s{};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
  }

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n);
  std::vector<cplx> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out[i * b.dim() + j] = a.amp(i) * b.amp(j);
    }
  }
  return StateVector(n, std::move(out));
}

namespace detail {

// Bit positions (from the LSB) for 1-based qubit labels; qubits[0] maps to the
// most significant bit of the operator's sub-index.
inline std::array<int, kMaxQubits> bit_shifts(const std::vector<int>& qubits, int n_qubits) {
  std::array<int, kMaxQubits> shift{};
  for (std::size_t m = 0; m < qubits.size(); ++m) shift[m] = n_qubits - qubits[m];
  return shift;
}

inline void check_operator_arity(const Matrix& op, std::size_t k) {
  const int want = 1 << k;
  if (op.rows() != want || op.cols() != want) {
    throw std::invalid_argument("operator dimension does not match qubit list");
  }
}

}  // namespace detail

inline StateVector apply_operator(const StateVector& psi, const Matrix& op,
                                  const std::vector<int>& qubits) {
  const int n = psi.n_qubits();
  check_qubit_labels(qubits, n);
  const std::size_t k = qubits.size();
  detail::check_operator_arity(op, k);
  const auto shift = detail::bit_shifts(qubits, n);
  const std::size_t dim = psi.dim();
  std::size_t mask = 0;
  for (std::size_t m = 0; m < k; ++m) mask |= std::size_t{1} << shift[m];

  std::vector<cplx> out(dim, cplx{});
  for (std::size_t i = 0; i < dim; ++i) {
    int row = 0;
    for (std::size_t m = 0; m < k; ++m) row = (row << 1) | static_cast<int>((i >> shift[m]) & 1u);
    const std::size_t base = i & ~mask;
    cplx acc{};
    for (int col = 0; col < (1 << k); ++col) {
      std::size_t j = base;
      for (std::size_t m = 0; m < k; ++m) {
        if ((col >> (k - 1 - m)) & 1) j |= std::size_t{1} << shift[m];
      }
      acc += op(row, col) * psi.amp(j);
    }
    out[i] = acc;
  }
  return StateVector(n, std::move(out));
}

// Expands op acting on the listed qubits to the full 2^n x 2^n matrix.
inline Matrix embed_operator(const Matrix& op, const std::vector<int>& qubits, int n_qubits) {
  check_qubit_count(n_qubits);
  check_qubit_labels(qubits, n_qubits);
  const std::size_t k = qubits.size();
  detail::check_operator_arity(op, k);
  const auto shift = detail::bit_shifts(qubits, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::size_t mask = 0;
  for (std::size_t m = 0; m < k; ++m) mask |= std::size_t{1} << shift[m];

  Matrix e(static_cast<int>(dim), static_cast<int>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    int row = 0;
    for (std::size_t m = 0; m < k; ++m) row = (row << 1) | static_cast<int>((i >> shift[m]) & 1u);
    const std::size_t base = i & ~mask;
    for (int col = 0; col < (1 << k); ++col) {
      std::size_t j = base;
      for (std::size_t m = 0; m < k; ++m) {
        if ((col >> (k - 1 - m)) & 1) j |= std::size_t{1} << shift[m];
      }
      e(static_cast<int>(i), static_cast<int>(j)) = op(row, col);
    }
  }
  return e;
}

// Mixed (or scaled) state as an explicit dense matrix. The trace is
// deliberately unconstrained: branch-weighted and unnormalized densities are
// legal values throughout the noise pipeline.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits)
      : n_qubits_(n_qubits), m_(1 << n_qubits, 1 << n_qubits) {
    check_qubit_count(n_qubits);
  }

  DensityMatrix(int n_qubits, Matrix entries) : n_qubits_(n_qubits), m_(std::move(entries)) {
    check_qubit_count(n_qubits);
    const int dim = 1 << n_qubits;
    if (m_.rows() != dim || m_.cols() != dim) {
      throw std::invalid_argument("density matrix must be 2^n x 2^n");
    }
  }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }

  Matrix& entries() { return m_; }
  const Matrix& entries() const { return m_; }

  cplx& operator()(int r, int c) { return m_(r, c); }
  const cplx& operator()(int r, int c) const { return m_(r, c); }

  cplx trace() const { return m_.trace(); }
  bool is_hermitian(double tol = kStepTol) const { return m_.is_hermitian(tol); }

  double min_eigenvalue() const {
    const auto eig = hermitian_eigenvalues(m_);
    return eig.front();
  }

  DensityMatrix& operator+=(const DensityMatrix& o) {
    if (n_qubits_ != o.n_qubits_) throw std::invalid_argument("density matrix size mismatch");
    m_ += o.m_;
    return *this;
  }

 private:
  int n_qubits_;
  Matrix m_;
};

// weight * |psi><psi|
inline DensityMatrix density_from_state(const StateVector& psi, double weight = 1.0) {
  if (weight < 0.0) throw std::invalid_argument("weight must be nonnegative");
  DensityMatrix rho(psi.n_qubits());
  for (std::size_t r = 0; r < psi.dim(); ++r) {
    const cplx a = psi.amp(r) * weight;
    if (a == cplx{}) continue;
    for (std::size_t c = 0; c < psi.dim(); ++c) {
      rho(static_cast<int>(r), static_cast<int>(c)) = a * std::conj(psi.amp(c));
    }
  }
  return rho;
}

// op rho (left multiplication only).
inline DensityMatrix apply_operator(const DensityMatrix& rho, const Matrix& op,
                                    const std::vector<int>& qubits) {
  const Matrix e = embed_operator(op, qubits, rho.n_qubits());
  return DensityMatrix(rho.n_qubits(), e * rho.entries());
}

// op rho op^dagger
inline DensityMatrix conjugate_with(const DensityMatrix& rho, const Matrix& op,
                                    const std::vector<int>& qubits) {
  const Matrix e = embed_operator(op, qubits, rho.n_qubits());
  return DensityMatrix(rho.n_qubits(), e * rho.entries() * e.adjoint());
}

// Traces out the listed qubits; the kept qubits retain their relative order.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& traced_out) {
  const int n = rho.n_qubits();
  check_qubit_labels(traced_out, n);
  const int t = static_cast<int>(traced_out.size());
  if (t == n) throw std::invalid_argument("cannot trace out every qubit");

  std::vector<int> kept;
  for (int q = 1; q <= n; ++q) {
    bool traced = false;
    for (int d : traced_out) traced |= (d == q);
    if (!traced) kept.push_back(q);
  }
  const int nk = n - t;
  const auto kept_shift = detail::bit_shifts(kept, n);
  const auto traced_shift = detail::bit_shifts(traced_out, n);

  auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (int m = 0; m < nk; ++m) {
      if ((kept_bits >> (nk - 1 - m)) & 1u) idx |= std::size_t{1} << kept_shift[m];
    }
    for (int m = 0; m < t; ++m) {
      if ((traced_bits >> (t - 1 - m)) & 1u) idx |= std::size_t{1} << traced_shift[m];
    }
    return idx;
  };

  DensityMatrix out(nk);
  const std::size_t dim_out = out.dim();
  for (std::size_t tr = 0; tr < (std::size_t{1} << t); ++tr) {
    for (std::size_t r = 0; r < dim_out; ++r) {
      const std::size_t big_r = compose(r, tr);
      for (std::size_t c = 0; c < dim_out; ++c) {
        out(static_cast<int>(r), static_cast<int>(c)) +=
            rho(static_cast<int>(big_r), static_cast<int>(compose(c, tr)));
      }
    }
  }
  return out;
}

// <psi| rho |psi> for a normalized pure reference. The result is real up to
// numerical noise; a larger imaginary part means rho was not Hermitian.
inline double fidelity_pure(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.n_qubits() != rho.n_qubits()) {
    throw std::invalid_argument("fidelity dimension mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("reference state must be normalized");
  }
  cplx acc{};
  for (std::size_t r = 0; r < psi.dim(); ++r) {
    cplx row{};
    for (std::size_t c = 0; c < psi.dim(); ++c) {
      row += rho(static_cast<int>(r), static_cast<int>(c)) * psi.amp(c);
    }
    acc += std::conj(psi.amp(r)) * row;
  }
  if (std::abs(acc.imag()) > kStepTol) {
    throw std::runtime_error("fidelity has a non-real value; density is not hermitian");
  }
  return acc.real();
}

}  // namespace qrsp
