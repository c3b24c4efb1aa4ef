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

#include "molspec/quantum_state.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "molspec/errors.hpp"
#include "molspec/rng.hpp"

using namespace molspec;

namespace {

constexpr double kPi = std::numbers::pi;

/** Two-qubit circuit state with every channel location exercised. */
DensityMatrix noisy_probe_state() {
  AnsatzParams params{{1.1, 0.3, 2.0, -0.7, 0.9, 1.8}};
  const NoiseModel noise = NoiseModel::parse(
      "amplitude_damping:0.15:1@after_gate_1,dephasing:0.1:2@after_entangler,"
      "depolarizing:0.05");
  return prepare_state(params, noise);
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("basic states: ground, maximally mixed, purity") {
  const DensityMatrix g = DensityMatrix::computational_ground(2);
  CHECK(g.mat(0, 0) == Complex(1, 0));
  CHECK(g.purity() == doctest::Approx(1.0));
  g.validate();

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(mixed.mat(3, 3) == Complex(0.25, 0));
  CHECK(mixed.purity() == doctest::Approx(0.25));
  mixed.validate();

  // pure() normalizes its amplitude vector.
  const DensityMatrix p = DensityMatrix::pure({Complex(3, 0), Complex(4, 0)});
  CHECK(p.mat(0, 0).real() == doctest::Approx(9.0 / 25.0));
  CHECK(p.purity() == doctest::Approx(1.0));
}

TEST_CASE("validate rejects non-unit trace and non-Hermitian matrices") {
  DensityMatrix bad = DensityMatrix::computational_ground(1);
  bad.mat(1, 1) = 0.5;  // trace 1.5
  CHECK_THROWS_AS(bad.validate(), NumericalError);

  DensityMatrix skew = DensityMatrix::maximally_mixed(1);
  skew.mat(0, 1) = Complex(0.1, 0.0);  // no conjugate partner
  CHECK_THROWS_AS(skew.validate(), NumericalError);
}

TEST_CASE("qubit rotation is unitary and drives a full bit flip") {
  const ComplexMatrix u = single_qubit_rotation(1.234, 0.567, 1);
  CHECK((u.adjoint() * u - ComplexMatrix::identity(4)).frobenius_norm() < 1e-14);

  // Amplitude pi about the X axis flips qubit 1: |00> -> |10>.
  DensityMatrix rho = DensityMatrix::computational_ground(2);
  rho = apply_unitary(rho, single_qubit_rotation(kPi, 0.0, 1));
  CHECK(rho.mat(2, 2).real() == doctest::Approx(1.0));

  // Phase pi/2 selects the Y axis; the flip still lands in |1>.
  DensityMatrix rho2 = DensityMatrix::computational_ground(2);
  rho2 = apply_unitary(rho2, single_qubit_rotation(kPi, kPi / 2, 2));
  CHECK(rho2.mat(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("entangler rotates only within the even-parity span") {
  const ComplexMatrix u = bswap(1.9, 0.4);
  CHECK((u.adjoint() * u - ComplexMatrix::identity(4)).frobenius_norm() < 1e-14);
  CHECK(u(1, 1) == Complex(1, 0));
  CHECK(u(2, 2) == Complex(1, 0));
  CHECK(u(1, 2) == Complex(0, 0));

  // Full length converts |00> into |11> (up to phase).
  DensityMatrix rho = DensityMatrix::computational_ground(2);
  rho = apply_unitary(rho, bswap(kPi, 0.7));
  CHECK(rho.mat(3, 3).real() == doctest::Approx(1.0));

  // Half length from |00> makes the even-parity Bell pair: <XX> = sin(phase)...
  // check instead the populations split evenly.
  DensityMatrix bell = DensityMatrix::computational_ground(2);
  bell = apply_unitary(bell, bswap(kPi / 2, 0.0));
  CHECK(bell.mat(0, 0).real() == doctest::Approx(0.5));
  CHECK(bell.mat(3, 3).real() == doctest::Approx(0.5));
  CHECK(bell.purity() == doctest::Approx(1.0));
}

TEST_CASE("built-in channels satisfy Kraus completeness across parameters") {
  for (double p : {0.0, 0.3, 1.0}) {
    amplitude_damping(p).validate();
    dephasing(p).validate();
    pauli_x(p).validate();
    pauli_y(p).validate();
    depolarizing(p).validate();
  }
  CHECK_THROWS_AS(pauli_x(-0.1), ConfigError);
  CHECK_THROWS_AS(amplitude_damping(1.5), ConfigError);
  CHECK_THROWS_AS(make_channel("leaky", 0.1), ConfigError);
}

TEST_CASE("amplitude damping at full strength resets the target qubit") {
  // |10>: qubit 1 excited.
  DensityMatrix rho = DensityMatrix::pure(
      {Complex(0, 0), Complex(0, 0), Complex(1, 0), Complex(0, 0)});
  rho = apply_channel(rho, amplitude_damping(1.0, 1));
  CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0));
  rho.validate();
}

TEST_CASE("bit-flip channel mixes the addressed qubit only") {
  DensityMatrix rho = DensityMatrix::computational_ground(2);
  rho = apply_channel(rho, pauli_x(0.2, 2));
  CHECK(rho.mat(0, 0).real() == doctest::Approx(0.8));
  CHECK(rho.mat(1, 1).real() == doctest::Approx(0.2));  // |01>: qubit 2 flipped
  CHECK(rho.mat(2, 2).real() == doctest::Approx(0.0));
  CHECK(rho.purity() < 1.0);
}

TEST_CASE("full-strength depolarizing spreads weight 1/3 per Pauli") {
  DensityMatrix rho = DensityMatrix::computational_ground(2);
  rho = apply_channel(rho, depolarizing(1.0, 1));
  // X and Y move |0> to |1> on qubit 1, Z leaves it: 2/3 vs 1/3.
  CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0 / 3.0));
  CHECK(rho.mat(2, 2).real() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("noise specs parse locations, qubits, and defaults") {
  const NoiseModel m = NoiseModel::parse(
      "pauli_x:0.1, dephasing:0.02:2@after_entangler");
  REQUIRE(m.channels.size() == 2);
  CHECK(m.channels[0].first == NoiseLocation::EndOfPrep);
  CHECK(m.channels[0].second.label == "pauli_x");
  CHECK(m.channels[1].first == NoiseLocation::AfterEntangler);
  CHECK(m.at(NoiseLocation::AfterEntangler).size() == 1);
  CHECK(m.at(NoiseLocation::AfterGate1).empty());

  CHECK(NoiseModel::parse("").empty());
  CHECK(NoiseModel::parse("none").empty());
  CHECK_THROWS_AS(NoiseModel::parse("pauli_x"), ConfigError);
  CHECK_THROWS_AS(NoiseModel::parse("pauli_x:0.1@nowhere"), ConfigError);
  CHECK_THROWS_AS(NoiseModel::parse("pauli_x:2.0"), ConfigError);
}

TEST_CASE("the prepared state starts at |00> and stays physical under noise") {
  const DensityMatrix idle =
      prepare_state(AnsatzParams{{0, 0, 0, 0, 0, 0}}, NoiseModel::none());
  CHECK(idle.mat(0, 0).real() == doctest::Approx(1.0));
  CHECK(idle.purity() == doctest::Approx(1.0));

  const DensityMatrix noisy = noisy_probe_state();
  noisy.validate();
  CHECK(noisy.purity() < 1.0 - 1e-6);

  // Noiseless preparation is always pure, for any parameter point.
  RngStream rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<double, 6> u{};
    for (double& x : u) x = rng.uniform();
    const DensityMatrix pure =
        prepare_state(AnsatzParams::from_normalized(u), NoiseModel::none());
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("expectation values reproduce textbook cases") {
  const DensityMatrix g = DensityMatrix::computational_ground(2);
  CHECK(expectation(g, PauliString::parse("ZI")) == doctest::Approx(1.0));
  CHECK(expectation(g, PauliString::parse("XX")) == doctest::Approx(0.0));

  DensityMatrix flipped = apply_unitary(g, single_qubit_rotation(kPi, 0.0, 1));
  CHECK(expectation(flipped, PauliString::parse("ZI")) == doctest::Approx(-1.0));

  QubitOperator op(2);
  op.add_term("ZI", 2.0);
  op.add_term("IZ", 3.0);
  CHECK(expectation(g, op) == doctest::Approx(5.0));

  QubitOperator skew(2);
  skew.add_term("XI", Complex(0, 1));
  CHECK_THROWS(expectation(g, skew));
}

TEST_CASE("finite-shot correlators are exact at the distribution edges") {
  const DensityMatrix g = DensityMatrix::computational_ground(2);
  RngStream rng(17);
  // <ZI> = 1: every Bernoulli outcome is a success regardless of shots.
  CHECK(sample_correlator(g, PauliString::parse("ZI"), 100, rng) == 1.0);
  const DensityMatrix flipped =
      apply_unitary(g, single_qubit_rotation(kPi, 0.0, 1));
  CHECK(sample_correlator(flipped, PauliString::parse("ZI"), 100, rng) == -1.0);
}

TEST_CASE("finite-shot correlators concentrate around the true value") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const PauliString zi = PauliString::parse("ZI");
  RngStream rng(23);
  const long shots = 10000;
  const double est = sample_correlator(mixed, zi, shots, rng);
  // <ZI> = 0 with per-shot variance 1: allow 5 standard errors.
  CHECK(std::abs(est) < 5.0 / std::sqrt(static_cast<double>(shots)));
}

TEST_CASE("linear-inversion tomography round-trips simulator states") {
  const DensityMatrix rho = noisy_probe_state();
  const DensityMatrix back = tomographic_reconstruct(exact_correlators(rho));
  CHECK((back.mat - rho.mat).frobenius_norm() < 1e-12);

  auto partial = exact_correlators(rho);
  partial.erase(PauliString::parse("XY"));
  CHECK_THROWS_AS(tomographic_reconstruct(partial), ConfigError);

  auto broken = exact_correlators(rho);
  broken[PauliString::parse("XY")] = 1.5;
  CHECK_THROWS_AS(tomographic_reconstruct(broken), ConfigError);
}

}  // TEST_SUITE
