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

#include <string>
#include <utility>
#include <vector>

#include "molspec/quantum_state.hpp"
#include "molspec/vqe.hpp"

namespace molspec {

/**
 * One subspace-expansion instance: reference state rho, Hamiltonian, the
 * expansion operator set {O_i}, the evaluation mode, and the relative
 * overlap cutoff used to discard near-null subspace directions.
 */
struct QseProblem {
  DensityMatrix state;
  QubitOperator hamiltonian;
  OperatorSet ops;
  EvalSpec eval = EvalSpec::exact();
  double cutoff = 1e-8;
};

/**
 * Subspace matrices H_ij = Tr[O_i^dag H O_j rho] and the overlap (Gram)
 * matrix S_ij = Tr[O_i^dag O_j rho]. Exact mode evaluates the traces
 * directly. Sampled mode expands each product into Pauli strings,
 * estimates every distinct string's correlator exactly once per build
 * with the configured shot count (shared across all matrix entries, the
 * way a tomographic experiment would), and assembles the entries from
 * those shared estimates; it requires an RNG stream. Both matrices are
 * Hermitized by adjoint averaging before being returned.
 */
std::pair<ComplexMatrix, ComplexMatrix> build_matrices(const QseProblem& problem,
                                                       RngStream* rng = nullptr);

/** Spectrum and diagnostics of the generalized problem H C = S C E. */
struct QseSolution {
  std::vector<double> eigenvalues;  ///< ascending, one per retained direction
  std::size_t rank = 0;             ///< retained subspace dimension
  std::vector<double> s_spectrum;   ///< overlap spectrum, ascending
  ComplexMatrix h_matrix;           ///< as measured (pre-orthogonalization)
  ComplexMatrix s_matrix;
  std::vector<std::string> op_labels;
};

QseSolution solve(const QseProblem& problem, RngStream* rng = nullptr);

/** One exact eigenvalue with the QSE values matched to it. */
struct MatchedLevel {
  double qse_value = 0.0;   ///< mean of the absorbed QSE eigenvalues
  double exact_value = 0.0;
  int multiplicity = 0;
};

/**
 * Partition of a QSE spectrum into levels matching the exact spectrum and
 * spurious leftovers. A spurious state is a QSE eigenvalue that fails to
 * coincide with any true Hamiltonian eigenvalue; they appear when the
 * operator set cannot resolve a mixed reference state's components.
 */
struct SpuriousReport {
  std::vector<MatchedLevel> matched;  ///< sorted by exact value
  std::vector<double> spurious;       ///< unmatched QSE eigenvalues, ascending
  double tolerance = 0.0;
};

/**
 * Greedy nearest matching of QSE eigenvalues to exact eigenvalues within
 * match_tol; each exact value may absorb several QSE values (reported as
 * one level with multiplicity). Default tolerance 1e-6 Ha suits exact
 * mode; sampled spectra should pass roughly 10x the shot standard error.
 */
SpuriousReport classify_spurious(const QseSolution& solution,
                                 const std::vector<double>& exact_eigenvalues,
                                 double match_tol = 1e-6);

/**
 * The same matrices computed through the row-major vectorization
 * identity: with |O> the vectorized operator matrix,
 * H_ij = <O_i| H (x) rho^T |O_j> and S_ij = <O_i| I (x) rho^T |O_j>.
 * Exists purely as an independent cross-check of build_matrices; exact
 * mode only.
 */
std::pair<ComplexMatrix, ComplexMatrix> vectorized_elements(const QseProblem& problem);

/**
 * Fixed two-qubit worked example for the spurious-state phenomenology:
 * H = ZI + IZ + XX (spectrum {-sqrt5, -1, +1, +sqrt5}), reference state
 * rho = 1/2 rho0 + 1/2 K rho0 K with rho0 the exact ground state and K a
 * probability-1/2 bit flip on qubit 1 whose Kraus operator carries the
 * frame phase (K = Y1 = i X1 Z1). With that phase the six-operator set
 * "si_six" corrects the mixture exactly; with a bare X1 flip it does not
 * — the relative phase between the ground state's |00> and |11>
 * amplitudes is what the correcting sets key on.
 */
struct SpuriousDemoSetup {
  QubitOperator hamiltonian;
  DensityMatrix pure_ground;
  DensityMatrix corrupted;
  std::vector<double> exact_eigenvalues;  ///< {-sqrt5, -1, +1, +sqrt5}
};

SpuriousDemoSetup spurious_demo_setup();

}  // namespace molspec
