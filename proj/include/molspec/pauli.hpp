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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "molspec/linalg.hpp"

namespace molspec {

/** Symbols for the single-qubit Pauli operators (and identity). */
enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_to_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * Tensor product of single-qubit Paulis over n >= 1 qubits. Qubit 1 is the
 * left (most significant) factor, so the matrix basis order is
 * |00>, |01>, |10>, |11> at n = 2 and "ZI" means Z on qubit 1.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ops);

  /** Parse compact text such as "ZI" or "XX". */
  static PauliString parse(std::string_view text);
  static PauliString identity(std::size_t n);

  std::size_t n_qubits() const { return ops_.size(); }
  /** Number of non-identity factors. */
  std::size_t weight() const;
  /** Factor on the given 1-based qubit index. */
  Pauli factor(std::size_t qubit) const;
  const std::vector<Pauli>& ops() const { return ops_; }
  bool is_identity() const { return weight() == 0; }
  std::string str() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> ops_;
};

/** Result of a Pauli string product: matrix(a)*matrix(b) = phase*matrix(product). */
struct PauliProduct {
  Complex phase;  ///< exactly one of {1, i, -1, -i}
  PauliString string;
};

/** Exact group product of two equal-length Pauli strings. */
PauliProduct multiply(const PauliString& a, const PauliString& b);

/** Dense 2^n x 2^n matrix of a Pauli string (entries in {0, +-1, +-i}). */
ComplexMatrix to_matrix(const PauliString& p);

/**
 * Complex-linear combination of Pauli strings on a fixed qubit count,
 * canonicalized: no zero coefficients, no duplicate strings. Hermitian
 * exactly when every coefficient is real (each Pauli string is
 * self-adjoint).
 */
class QubitOperator {
 public:
  explicit QubitOperator(std::size_t n) : n_(n) {}

  std::size_t n_qubits() const { return n_; }
  const std::map<PauliString, Complex>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /** Accumulate coeff * string; exact cancellations drop the term. */
  void add_term(const PauliString& string, Complex coeff);
  void add_term(std::string_view text, Complex coeff);

  /** Coefficient of the given string, or 0 if absent. */
  Complex coefficient(const PauliString& string) const;

  /** True when every stored coefficient has |imag| <= tol. */
  bool is_hermitian(double tol = 0.0) const;

  QubitOperator& operator+=(const QubitOperator& other);
  QubitOperator& operator*=(Complex scale);

 private:
  std::size_t n_ = 0;
  std::map<PauliString, Complex> terms_;
};

/**
 * Dense matrix of an operator. The qubit count must not exceed max_qubits
 * (dense storage grows as 4^n; the default cap keeps accidental large
 * operators from exhausting memory).
 */
ComplexMatrix to_matrix(const QubitOperator& op, std::size_t max_qubits = 6);

/**
 * Ordered collection of distinct Pauli strings used as a QSE expansion
 * basis. The order field records the maximum Pauli weight in the set.
 */
struct OperatorSet {
  std::vector<PauliString> strings;
  std::string label;
  std::size_t order = 0;

  std::size_t size() const { return strings.size(); }
};

/**
 * Canonical set ordering: weight-major, then lexicographic with letter
 * order X < Y < Z < I, so qubit-1 flips come before qubit-2 flips
 * ({II, XI, YI, ZI, IX, IY, IZ} at n = 2, k = 1).
 */
bool canonical_less(const PauliString& a, const PauliString& b);

/**
 * All strings of weight <= k on n qubits in canonical order; size is
 * sum_{j<=k} C(n,j) 3^j. k = 1 is the linear-response set, k = n the
 * complete basis.
 */
OperatorSet pauli_basis(std::size_t n, std::size_t k);

/**
 * Registered two-qubit sets usable by name in config files:
 *   linear_response  — pauli_basis(2, 1): {II, XI, YI, ZI, IX, IY, IZ}
 *   lr_plus_xx       — linear_response extended by XX
 *   si_nine          — {II, XI, YI, IX, IZ, XX, XZ, YX, YZ}
 *   si_six           — {II, XI, ZI, IZ, XZ, ZZ}
 *   zz_pair          — {II, ZZ}
 *   single_x/y/z     — {II, XI, IX} and the Y-/Z-only analogues
 *   full_p2          — pauli_basis(2, 2), the complete 16-string basis
 * Unknown labels raise ConfigError.
 */
OperatorSet named_set(const std::string& label);

/** Labels accepted by named_set, sorted. */
std::vector<std::string> registered_set_names();

/** Build a set from explicit string texts (e.g. a config's comma list). */
OperatorSet set_from_strings(const std::string& label,
                             const std::vector<std::string>& texts);

}  // namespace molspec
