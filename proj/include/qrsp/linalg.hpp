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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qrsp {

using cplx = std::complex<double>;

// Tolerance tiers shared by the library and its tests:
// exact constructions, single linear-algebra steps, multi-step pipelines.
inline constexpr double kConstructionTol = 1e-15;
inline constexpr double kStepTol = 1e-12;
inline constexpr double kPipelineTol = 1e-10;

// Dense row-major complex matrix. Dimensions here never exceed 32x32.
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, cplx{});
  }

  Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw std::invalid_argument("matrix must have rows");
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ == 0) throw std::invalid_argument("matrix must have columns");
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw std::invalid_argument("ragged matrix initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
      throw std::invalid_argument("matrix product dimension mismatch");
    }
    Matrix r(rows_, o.cols_);
    // i-k-j order keeps the inner loop on contiguous rows.
    for (int i = 0; i < rows_; ++i) {
      const cplx* a_row = &data_[static_cast<std::size_t>(i) * cols_];
      cplx* r_row = &r.data_[static_cast<std::size_t>(i) * o.cols_];
      for (int k = 0; k < cols_; ++k) {
        const cplx a_ik = a_row[k];
        if (a_ik == cplx{}) continue;
        const cplx* b_row = &o.data_[static_cast<std::size_t>(k) * o.cols_];
        for (int j = 0; j < o.cols_; ++j) r_row[j] += a_ik * b_row[j];
      }
    }
    return r;
  }

  Matrix scaled(cplx factor) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= factor;
    return r;
  }

  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    }
    return r;
  }

  cplx trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace needs a square matrix");
    cplx t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_hermitian(double tol = kStepTol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i; j < cols_; ++j) {
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
      }
    }
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("matrix shape mismatch");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia) {
    for (int ja = 0; ja < a.cols(); ++ja) {
      const cplx v = a(ia, ja);
      if (v == cplx{}) continue;
      for (int ib = 0; ib < b.rows(); ++ib) {
        for (int jb = 0; jb < b.cols(); ++jb) {
          r(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
        }
      }
    }
  }
  return r;
}

// Eigenvalues of a Hermitian matrix H = X + iY, ascending. Uses cyclic Jacobi
// on the real-symmetric embedding [[X, -Y], [Y, X]], whose spectrum is that of
// H with every eigenvalue doubled.
inline std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("eigenvalues need a square matrix");
  }
  if (!h.is_hermitian(1e-9)) {
    throw std::invalid_argument("matrix is not hermitian");
  }
  const int n = h.rows();
  const int m = 2 * n;
  std::vector<double> s(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int r, int c) -> double& { return s[static_cast<std::size_t>(r) * m + c]; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double x = h(r, c).real();
      const double y = h(r, c).imag();
      at(r, c) = x;
      at(r, c + n) = -y;
      at(r + n, c) = y;
      at(r + n, c + n) = x;
    }
  }

  double scale = 0.0;
  for (double v : s) scale += v * v;
  const double stop = std::max(scale, 1e-300) * 1e-30;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    }
    if (off < stop) break;
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (int k = 0; k < m; ++k) {
          const double skp = at(k, p);
          const double skq = at(k, q);
          at(k, p) = c * skp - sn * skq;
          at(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < m; ++k) {
          const double spk = at(p, k);
          const double sqk = at(q, k);
          at(p, k) = c * spk - sn * sqk;
          at(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }

  std::vector<double> diag(m);
  for (int i = 0; i < m; ++i) diag[i] = at(i, i);
  std::sort(diag.begin(), diag.end());
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  return eig;
}

}  // namespace qrsp
