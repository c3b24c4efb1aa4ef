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

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "molspec/pauli.hpp"

namespace molspec {

/**
 * One internuclear distance of the two-qubit molecular-hydrogen
 * Hamiltonian
 *
 *   H(R) = g0 II + g1 ZI + g2 IZ + g3 ZZ + g4 YY + g5 XX
 *
 * with R in Angstrom and every g in Hartree. The shipped dataset comes
 * from a minimal-basis (STO-3G) electronic-structure calculation of H2
 * reduced to two qubits; by the molecule's symmetry g1 = g2 and the YY
 * coefficient g4 is identically zero there.
 */
struct CoefficientRow {
  double R;
  double g0, g1, g2, g3, g4, g5;
};

/**
 * Coefficient table keyed by internuclear distance, strictly increasing in
 * R with no duplicates. The embedded default has 45 rows covering
 * R = 0.05 to 3.95 Angstrom.
 */
class MoleculeTable {
 public:
  /** The built-in dataset; byte-stable across releases. */
  static MoleculeTable embedded();

  /** Load and validate a CSV file with header R,g0,g1,g2,g3,g4,g5. */
  static MoleculeTable load(const std::string& path);

  /** Parse CSV from a stream; origin names the source in error messages. */
  static MoleculeTable parse_csv(std::istream& in, const std::string& origin);

  const std::vector<CoefficientRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  /** Row whose R matches within 1e-9 Angstrom; ConfigError if absent
   *  (distances are never interpolated). */
  const CoefficientRow& row_at(double R) const;

  /** Table restricted to the given distances (each must exist here);
   *  rows come back sorted ascending in R, duplicates rejected. */
  MoleculeTable subset(const std::vector<double>& r_values) const;

 private:
  explicit MoleculeTable(std::vector<CoefficientRow> rows);
  std::vector<CoefficientRow> rows_;
};

/** The operator g0 II + g1 ZI + g2 IZ + g3 ZZ + g4 YY + g5 XX
 *  (zero coefficients omitted, so the shipped rows give 5 terms). */
QubitOperator hamiltonian_from_row(const CoefficientRow& row);

/** hamiltonian_from_row for the table row matching R (no interpolation). */
QubitOperator hamiltonian_at(const MoleculeTable& table, double R);

/** All four eigenvalues, ascending, from the dense eigensolver. */
std::array<double, 4> exact_spectrum(const CoefficientRow& row);
std::array<double, 4> exact_spectrum(const MoleculeTable& table, double R);

/**
 * Closed-form spectrum. The Hamiltonian is block-diagonal over the two
 * parity sectors spanned by {|00>, |11>} and {|01>, |10>}, giving
 *
 *   even: g0 + g3 +- sqrt((g1+g2)^2 + (g5-g4)^2)
 *   odd:  g0 - g3 +- sqrt((g1-g2)^2 + (g5+g4)^2)
 *
 * exactly, for any real coefficients. When g1 = g2 and g4 = 0 (as in the
 * shipped dataset) this reduces to {g0+g3 +- sqrt(4 g1^2 + g5^2),
 * g0-g3 +- g5}. Returned ascending; serves as an independent cross-check
 * of the eigensolver.
 */
std::array<double, 4> analytic_spectrum(const CoefficientRow& row);

/** The 1.6e-3 Hartree threshold for chemically predictive energies. */
constexpr double chemical_accuracy() { return 1.6e-3; }

}  // namespace molspec
