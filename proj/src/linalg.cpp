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

#include "molspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "molspec/errors.hpp"

namespace molspec {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) throw std::logic_error("dim() called on a non-square matrix");
  return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  const std::size_t d = dim();
  Complex t = 0.0;
  for (std::size_t i = 0; i < d; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& other) const {
  ComplexMatrix out(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Complex f = (*this)(r, c);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t r2 = 0; r2 < other.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < other.cols_; ++c2)
          out(r * other.rows_ + r2, c * other.cols_ + c2) = f * other(r2, c2);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::logic_error("matrix product dimension mismatch");
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex f = (*this)(r, k);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += f * other(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  ComplexMatrix out = *this;
  out += other;
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  ComplexMatrix out = *this;
  out -= other;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::logic_error("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::logic_error("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : a_) z *= scale;
  return *this;
}

namespace {

double offdiagonal_norm(const ComplexMatrix& a) {
  const std::size_t d = a.dim();
  double s = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& input) {
  const std::size_t d = input.dim();
  const double scale = input.frobenius_norm();
  {
    ComplexMatrix asym = input - input.adjoint();
    if (asym.frobenius_norm() > 1e-10 * std::max(1.0, scale))
      throw NumericalError("eigh: input matrix is not Hermitian");
  }

  // Work on the exactly Hermitian average; roundoff asymmetry would
  // otherwise leak into the rotations.
  ComplexMatrix a(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(d);
  const double stop = 1e-13 * std::max(1.0, scale);

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiagonal_norm(a) <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Classic Jacobi angle for the 2x2 Hermitian block, phase-rotated
        // so the pivot entry is treated as real.
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase = apq / mag;  // e^{i arg(apq)}

        // R is identity except: R(p,p)=c, R(p,q)=s*phase,
        // R(q,p)=-s*conj(phase), R(q,q)=c. Apply A <- R^dag A R in place.
        for (std::size_t k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && offdiagonal_norm(a) > stop)
    throw NumericalError("eigh: Jacobi iteration did not converge in 100 sweeps");

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < d; ++k) out.eigenvectors(k, i) = v(k, order[i]);
  }
  return out;
}

GeneralizedEigenResult gen_eigh(const ComplexMatrix& h, const ComplexMatrix& s,
                                double cutoff) {
  if (h.dim() != s.dim())
    throw std::logic_error("gen_eigh: h and s dimensions differ");
  if (!(cutoff > 0.0 && cutoff < 1.0))
    throw std::invalid_argument("gen_eigh: cutoff must lie in (0, 1)");

  const EigenDecomposition es = eigh(s);
  const double max_ev = es.eigenvalues.back();
  if (!(max_ev > 0.0))
    throw NumericalError("gen_eigh: overlap matrix has no positive eigenvalue");

  GeneralizedEigenResult out;
  out.s_spectrum.reserve(es.eigenvalues.size());
  for (double ev : es.eigenvalues) {
    if (ev < -1e-8 * max_ev)
      throw NumericalError(
          "gen_eigh: overlap matrix eigenvalue is negative beyond tolerance");
    out.s_spectrum.push_back(ev < 0.0 ? 0.0 : ev);
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < out.s_spectrum.size(); ++i)
    if (out.s_spectrum[i] > cutoff * max_ev) kept.push_back(i);
  if (kept.empty()) throw NumericalError("gen_eigh: empty retained subspace");
  out.rank = kept.size();

  // Canonical orthogonalization: X = V_kept diag(lambda^{-1/2}).
  const std::size_t d = h.dim();
  ComplexMatrix x(d, out.rank);
  for (std::size_t j = 0; j < out.rank; ++j) {
    const double inv_sqrt = 1.0 / std::sqrt(out.s_spectrum[kept[j]]);
    for (std::size_t r = 0; r < d; ++r)
      x(r, j) = es.eigenvectors(r, kept[j]) * inv_sqrt;
  }
  const ComplexMatrix projected = x.adjoint() * h * x;
  out.eigenvalues = eigh(projected).eigenvalues;
  return out;
}

bool is_positive_semidefinite(const ComplexMatrix& a, double tol) {
  const EigenDecomposition ed = eigh(a);
  return ed.eigenvalues.front() >= -tol;
}

}  // namespace molspec
