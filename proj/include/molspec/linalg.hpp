// Copyright 2026 The molspec Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace molspec {

using Complex = std::complex<double>;

/**
 * Small dense complex matrix, row-major storage. All dimensions in this
 * toolkit are tiny (at most 16x16), so no effort is spent on blocking or
 * sparsity; clarity and exact reproducibility win.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /** Square zero matrix. */
  explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}

  /** Rectangular zero matrix. */
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  /** Dimension of a square matrix; throws std::logic_error otherwise. */
  std::size_t dim() const;

  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  /** Row-major entry storage. */
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  /** True when max |A_rc - conj(A_cr)| <= tol (absolute, entrywise). */
  bool is_hermitian(double tol) const;

  /** Kronecker product, this as the left (most significant) factor. */
  ComplexMatrix kron(const ComplexMatrix& other) const;

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
  }

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

/** Result of a Hermitian eigendecomposition A = V diag(eigenvalues) V^dag. */
struct EigenDecomposition {
  std::vector<double> eigenvalues;  ///< ascending
  ComplexMatrix eigenvectors;       ///< orthonormal columns, i-th matches eigenvalues[i]
};

/**
 * Hermitian eigendecomposition by cyclic complex Jacobi rotations.
 *
 * The input must be Hermitian to 1e-10 relative Frobenius tolerance (it is
 * symmetrized before iterating, so roundoff-level asymmetry is harmless).
 * Convergence: off-diagonal Frobenius norm below 1e-13 relative to
 * max(1, ||A||_F), or at most 100 sweeps (NumericalError beyond that).
 * Guarantees ||A - V L V^dag||_F <= 1e-10 ||A||_F and orthonormal columns
 * to 1e-10.
 */
EigenDecomposition eigh(const ComplexMatrix& a);

/** Result of the generalized problem H c = lambda S c on the retained subspace. */
struct GeneralizedEigenResult {
  std::vector<double> eigenvalues;  ///< ascending, one per retained direction
  std::size_t rank = 0;             ///< retained subspace dimension
  std::vector<double> s_spectrum;   ///< full S spectrum, ascending, clamped at 0
};

/**
 * Generalized Hermitian eigenproblem with a possibly singular overlap
 * matrix, solved by canonical orthogonalization: eigendecompose s, keep
 * directions with eigenvalue > cutoff * max(s eigenvalues), scale the kept
 * eigenvectors by inverse square roots, project h into that subspace, and
 * diagonalize the projection.
 *
 * S eigenvalues in (-1e-8 * max, 0) are treated as roundoff and clamped to
 * zero; anything more negative throws NumericalError (the overlap of a
 * physical state cannot be that indefinite). cutoff must lie in (0, 1).
 */
GeneralizedEigenResult gen_eigh(const ComplexMatrix& h, const ComplexMatrix& s,
                                double cutoff = 1e-8);

/** True when every eigenvalue of the (Hermitian) input is >= -tol. */
bool is_positive_semidefinite(const ComplexMatrix& a, double tol);

}  // namespace molspec
