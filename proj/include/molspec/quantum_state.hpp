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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "molspec/ansatz.hpp"
#include "molspec/linalg.hpp"
#include "molspec/pauli.hpp"
#include "molspec/rng.hpp"

namespace molspec {

/**
 * An n-qubit state as a 2^n x 2^n density matrix. Hermitian with unit
 * trace; positive semidefinite whenever produced by the simulator.
 * Tomographic reconstructions are exempt from the PSD requirement — linear
 * inversion deliberately does not enforce physicality, so shot noise can
 * produce small negative eigenvalues.
 */
struct DensityMatrix {
  std::size_t n = 0;
  ComplexMatrix mat;

  /** |psi><psi| from an amplitude vector of length 2^n (normalized here). */
  static DensityMatrix pure(const std::vector<Complex>& amplitudes);

  /** |0...0><0...0|. */
  static DensityMatrix computational_ground(std::size_t n);

  static DensityMatrix maximally_mixed(std::size_t n);

  /** Tr[rho^2]; 1 for pure states, < 1 for proper mixtures. */
  double purity() const;

  /** Throws NumericalError unless Hermitian (1e-10) with unit trace (1e-10). */
  void validate() const;
};

/**
 * A quantum channel as a list of Kraus operators K_k acting by
 * rho -> sum_k K_k rho K_k^dag, with completeness sum_k K_k^dag K_k = I
 * to 1e-12.
 */
struct KrausChannel {
  std::vector<ComplexMatrix> kraus_ops;
  std::string label;

  /** Throws NumericalError when completeness fails. */
  void validate(double tol = 1e-12) const;
};

/**
 * Built-in single-qubit channels, embedded at the given 1-based qubit of
 * an n-qubit register (identity on the rest). Kraus operators, written
 * for the target qubit:
 *
 *   amplitude_damping(g): K0 = [[1,0],[0,sqrt(1-g)]], K1 = [[0,sqrt(g)],[0,0]]
 *   dephasing(l):         K0 = sqrt(1-l) I,  K1 = sqrt(l) Z
 *   pauli_x(p):           K0 = sqrt(1-p) I,  K1 = sqrt(p) X
 *   pauli_y(p):           K0 = sqrt(1-p) I,  K1 = sqrt(p) Y
 *   depolarizing(p):      K0 = sqrt(1-p) I,  K{1,2,3} = sqrt(p/3) {X,Y,Z}
 *
 * Parameters must lie in [0, 1].
 */
KrausChannel amplitude_damping(double gamma, int qubit = 1, std::size_t n = 2);
KrausChannel dephasing(double lambda, int qubit = 1, std::size_t n = 2);
KrausChannel pauli_x(double p, int qubit = 1, std::size_t n = 2);
KrausChannel pauli_y(double p, int qubit = 1, std::size_t n = 2);
KrausChannel depolarizing(double p, int qubit = 1, std::size_t n = 2);

/** Channel by config name, e.g. make_channel("pauli_x", 0.1, 1). */
KrausChannel make_channel(const std::string& name, double param, int qubit = 1,
                          std::size_t n = 2);

/** Where in the preparation circuit a channel acts. */
enum class NoiseLocation { AfterGate1, AfterGate2, AfterEntangler, EndOfPrep };

NoiseLocation noise_location_from_string(const std::string& text);
std::string to_string(NoiseLocation loc);

/**
 * Ordered channel insertions for the preparation circuit. Parsed from
 * config text of the form "name:param[:qubit][@location]" with entries
 * separated by commas, e.g. "pauli_x:0.1@end_of_prep" or
 * "dephasing:0.02:2@after_entangler". The default location is
 * end_of_prep; the default qubit is 1.
 */
struct NoiseModel {
  std::vector<std::pair<NoiseLocation, KrausChannel>> channels;

  bool empty() const { return channels.empty(); }
  static NoiseModel none() { return NoiseModel{}; }
  static NoiseModel parse(const std::string& text);

  /** Channels registered at the given location, in listed order. */
  std::vector<const KrausChannel*> at(NoiseLocation loc) const;
};

/**
 * exp(-i (amplitude/2) (cos(phase) X + sin(phase) Y)) on the target
 * 1-based qubit, identity elsewhere.
 */
ComplexMatrix single_qubit_rotation(double amplitude, double phase, int qubit,
                                    std::size_t n = 2);

/**
 * Two-qubit entangler: rotation within span{|00>, |11>} acting there as
 *   [[cos(length/2), -i e^{-i phase} sin(length/2)],
 *    [-i e^{+i phase} sin(length/2), cos(length/2)]]
 * and as the identity on {|01>, |10>}.
 */
ComplexMatrix bswap(double length, double phase);

[[nodiscard]] DensityMatrix apply_unitary(const DensityMatrix& rho,
                                          const ComplexMatrix& u);
[[nodiscard]] DensityMatrix apply_channel(const DensityMatrix& rho,
                                          const KrausChannel& ch);

/**
 * Run the two-qubit preparation circuit: heralded (perfect) |00>
 * initialization, qubit-1 rotation, qubit-2 rotation, entangler with
 * coherent_offset added to its phase, with noise channels applied at
 * their declared locations.
 */
DensityMatrix prepare_state(const AnsatzParams& params, const NoiseModel& noise,
                            double coherent_offset = 0.0);

/**
 * Tr[op * rho] for a Hermitian operator. The imaginary residue must stay
 * below 1e-9 (NumericalError otherwise — it signals a corrupt state);
 * the real part is returned.
 */
double expectation(const DensityMatrix& rho, const QubitOperator& op);
double expectation(const DensityMatrix& rho, const PauliString& p);

/**
 * Finite-shot estimate of a Pauli correlator: draws `shots` Bernoulli
 * outcomes with success probability (1+<p>)/2 and returns
 * 2*(successes/shots) - 1, an unbiased estimator of <p>. <p> outside
 * [-1, 1] beyond 1e-9 is a NumericalError.
 */
double sample_correlator(const DensityMatrix& rho, const PauliString& p,
                         long shots, RngStream& rng);

/**
 * Linear-inversion tomography from the 15 non-identity two-qubit
 * correlators: rho = (1/4)(I + sum_P <P> P). Trace is exactly 1 and the
 * result is Hermitian, but PSD is deliberately NOT enforced. Missing
 * strings or values outside [-1, 1] raise ConfigError.
 */
DensityMatrix tomographic_reconstruct(const std::map<PauliString, double>& correlators);

/** Exact correlators <P> of rho for all 15 non-identity strings (n = 2). */
std::map<PauliString, double> exact_correlators(const DensityMatrix& rho);

}  // namespace molspec
