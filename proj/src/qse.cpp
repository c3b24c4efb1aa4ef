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

#include "molspec/qse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "molspec/errors.hpp"

namespace molspec {

namespace {

void check_problem(const QseProblem& problem) {
  problem.state.validate();
  if (problem.hamiltonian.n_qubits() != problem.state.n)
    throw std::invalid_argument("QSE: Hamiltonian/state qubit counts differ");
  if (!problem.hamiltonian.is_hermitian(1e-12))
    throw std::invalid_argument("QSE requires a Hermitian Hamiltonian");
  if (problem.ops.size() == 0)
    throw std::invalid_argument("QSE needs a non-empty operator set");
  for (const PauliString& s : problem.ops.strings)
    if (s.n_qubits() != problem.state.n)
      throw std::invalid_argument("QSE operator set qubit count mismatch");
  if (!(problem.cutoff > 0.0 && problem.cutoff < 1.0))
    throw std::invalid_argument("QSE cutoff must lie in (0, 1)");
}

ComplexMatrix hermitized(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  const ComplexMatrix adj = a.adjoint();
  out += adj;
  out *= Complex(0.5, 0.0);
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> build_exact(const QseProblem& problem) {
  const std::size_t m = problem.ops.size();
  std::vector<ComplexMatrix> op_mats;
  op_mats.reserve(m);
  for (const PauliString& s : problem.ops.strings) op_mats.push_back(to_matrix(s));
  const ComplexMatrix hm = to_matrix(problem.hamiltonian);

  ComplexMatrix h(m), s(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Pauli strings are self-adjoint, so O_i^dag = O_i.
    const ComplexMatrix left = op_mats[i] * hm;
    for (std::size_t j = 0; j < m; ++j) {
      h(i, j) = (left * op_mats[j] * problem.state.mat).trace();
      s(i, j) = (op_mats[i] * op_mats[j] * problem.state.mat).trace();
    }
  }
  return {hermitized(h), hermitized(s)};
}

std::pair<ComplexMatrix, ComplexMatrix> build_sampled(const QseProblem& problem,
                                                      RngStream& rng) {
  const std::size_t m = problem.ops.size();
  const auto& ops = problem.ops.strings;

  // Every entry expands into correlators of a handful of Pauli strings.
  // Collect the distinct strings first, then estimate each exactly once
  // (in canonical order, so the draw sequence does not depend on the
  // expansion order), and assemble all entries from the shared estimates.
  struct Expansion {
    std::vector<std::pair<Complex, PauliString>> h_terms;
    std::vector<std::pair<Complex, PauliString>> s_terms;
  };
  std::map<PauliString, double> estimates;
  std::vector<Expansion> expansions(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Expansion& ex = expansions[i * m + j];
      for (const auto& [hs, hc] : problem.hamiltonian.terms()) {
        const PauliProduct left = multiply(ops[i], hs);
        const PauliProduct full = multiply(left.string, ops[j]);
        const Complex coeff = hc * left.phase * full.phase;
        ex.h_terms.emplace_back(coeff, full.string);
        estimates.emplace(full.string, 0.0);
      }
      const PauliProduct overlap = multiply(ops[i], ops[j]);
      ex.s_terms.emplace_back(overlap.phase, overlap.string);
      estimates.emplace(overlap.string, 0.0);
    }

  for (auto& [string, value] : estimates) {
    value = string.is_identity()
                ? 1.0
                : sample_correlator(problem.state, string, problem.eval.shots, rng);
  }

  ComplexMatrix h(m), s(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Expansion& ex = expansions[i * m + j];
      Complex hv = 0.0, sv = 0.0;
      for (const auto& [coeff, string] : ex.h_terms)
        hv += coeff * estimates.at(string);
      for (const auto& [coeff, string] : ex.s_terms)
        sv += coeff * estimates.at(string);
      h(i, j) = hv;
      s(i, j) = sv;
    }
  return {hermitized(h), hermitized(s)};
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> build_matrices(const QseProblem& problem,
                                                       RngStream* rng) {
  check_problem(problem);
  if (problem.eval.mode == EvalMode::Exact) return build_exact(problem);
  if (rng == nullptr)
    throw std::invalid_argument("sampled QSE build requires an RNG stream");
  return build_sampled(problem, *rng);
}

QseSolution solve(const QseProblem& problem, RngStream* rng) {
  auto [h, s] = build_matrices(problem, rng);
  const GeneralizedEigenResult gen = gen_eigh(h, s, problem.cutoff);
  QseSolution out;
  out.eigenvalues = gen.eigenvalues;
  out.rank = gen.rank;
  out.s_spectrum = gen.s_spectrum;
  out.h_matrix = std::move(h);
  out.s_matrix = std::move(s);
  out.op_labels.reserve(problem.ops.size());
  for (const PauliString& str : problem.ops.strings)
    out.op_labels.push_back(str.str());
  return out;
}

SpuriousReport classify_spurious(const QseSolution& solution,
                                 const std::vector<double>& exact_eigenvalues,
                                 double match_tol) {
  if (!(match_tol > 0.0))
    throw std::invalid_argument("spurious matching tolerance must be positive");
  SpuriousReport report;
  report.tolerance = match_tol;
  if (exact_eigenvalues.empty()) {
    report.spurious = solution.eigenvalues;
    return report;
  }

  // Accumulate per exact eigenvalue; degenerate QSE values that land on
  // the same exact value merge into one matched level.
  std::map<std::size_t, std::pair<double, int>> absorbed;  // index -> (sum, count)
  for (double value : solution.eigenvalues) {
    std::size_t nearest = 0;
    double best = std::abs(value - exact_eigenvalues[0]);
    for (std::size_t k = 1; k < exact_eigenvalues.size(); ++k) {
      const double d = std::abs(value - exact_eigenvalues[k]);
      if (d < best) {
        best = d;
        nearest = k;
      }
    }
    if (best <= match_tol) {
      auto& [sum, count] = absorbed[nearest];
      sum += value;
      ++count;
    } else {
      report.spurious.push_back(value);
    }
  }
  for (const auto& [index, agg] : absorbed) {
    const auto& [sum, count] = agg;
    report.matched.push_back(MatchedLevel{sum / count,
                                          exact_eigenvalues[index], count});
  }
  std::sort(report.matched.begin(), report.matched.end(),
            [](const MatchedLevel& a, const MatchedLevel& b) {
              return a.exact_value < b.exact_value;
            });
  std::sort(report.spurious.begin(), report.spurious.end());
  return report;
}

std::pair<ComplexMatrix, ComplexMatrix> vectorized_elements(const QseProblem& problem) {
  check_problem(problem);
  if (problem.eval.mode != EvalMode::Exact)
    throw std::invalid_argument("vectorized_elements supports exact mode only");

  const std::size_t d = problem.state.mat.dim();
  const std::size_t m = problem.ops.size();

  // Row-major vectorization: vec(A B C) = (A kron C^T) vec(B), hence
  // Tr[O_i^dag H O_j rho] = vec(O_i)^dag (H kron rho^T) vec(O_j).
  ComplexMatrix basis(d * d, m);
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexMatrix mj = to_matrix(problem.ops.strings[j]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) basis(r * d + c, j) = mj(r, c);
  }
  const ComplexMatrix rho_t = problem.state.mat.transpose();
  const ComplexMatrix h_big = to_matrix(problem.hamiltonian).kron(rho_t);
  const ComplexMatrix s_big = ComplexMatrix::identity(d).kron(rho_t);
  const ComplexMatrix basis_dag = basis.adjoint();
  return {hermitized(basis_dag * h_big * basis),
          hermitized(basis_dag * s_big * basis)};
}

SpuriousDemoSetup spurious_demo_setup() {
  SpuriousDemoSetup setup{QubitOperator(2), DensityMatrix{}, DensityMatrix{}, {}};
  setup.hamiltonian.add_term("ZI", 1.0);
  setup.hamiltonian.add_term("IZ", 1.0);
  setup.hamiltonian.add_term("XX", 1.0);

  const EigenDecomposition ed = eigh(to_matrix(setup.hamiltonian));
  std::vector<Complex> ground(4);
  for (std::size_t r = 0; r < 4; ++r) ground[r] = ed.eigenvectors(r, 0);
  setup.pure_ground = DensityMatrix::pure(ground);
  setup.corrupted = apply_channel(setup.pure_ground, pauli_y(0.5, 1));
  setup.exact_eigenvalues = {ed.eigenvalues[0], ed.eigenvalues[1],
                             ed.eigenvalues[2], ed.eigenvalues[3]};
  return setup;
}

}  // namespace molspec
