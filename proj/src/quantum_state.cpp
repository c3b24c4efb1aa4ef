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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "molspec/errors.hpp"

namespace molspec {

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& amplitudes) {
  const std::size_t d = amplitudes.size();
  std::size_t n = 0;
  while ((std::size_t(1) << n) < d) ++n;
  if ((std::size_t(1) << n) != d || d == 0)
    throw std::invalid_argument("amplitude vector length must be a power of 2");
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (norm2 <= 0.0)
    throw std::invalid_argument("cannot normalize the zero vector");
  DensityMatrix rho{n, ComplexMatrix(d)};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      rho.mat(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
  return rho;
}

DensityMatrix DensityMatrix::computational_ground(std::size_t n) {
  const std::size_t d = std::size_t(1) << n;
  DensityMatrix rho{n, ComplexMatrix(d)};
  rho.mat(0, 0) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  const std::size_t d = std::size_t(1) << n;
  DensityMatrix rho{n, ComplexMatrix(d)};
  for (std::size_t i = 0; i < d; ++i) rho.mat(i, i) = 1.0 / static_cast<double>(d);
  return rho;
}

double DensityMatrix::purity() const {
  return (mat * mat).trace().real();
}

void DensityMatrix::validate() const {
  if (mat.dim() != (std::size_t(1) << n))
    throw NumericalError("density matrix dimension does not match qubit count");
  if (!mat.is_hermitian(1e-10))
    throw NumericalError("density matrix is not Hermitian");
  if (std::abs(mat.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw NumericalError("density matrix trace differs from 1");
}

void KrausChannel::validate(double tol) const {
  if (kraus_ops.empty()) throw NumericalError("channel has no Kraus operators");
  const std::size_t d = kraus_ops.front().dim();
  ComplexMatrix sum(d);
  for (const ComplexMatrix& k : kraus_ops) {
    if (k.dim() != d) throw NumericalError("Kraus operator dimensions differ");
    sum += k.adjoint() * k;
  }
  sum -= ComplexMatrix::identity(d);
  if (sum.frobenius_norm() > tol * std::sqrt(static_cast<double>(d)))
    throw NumericalError("channel '" + label +
                         "' violates Kraus completeness");
}

namespace {

void check_probability(double p, const std::string& name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ConfigError("channel '" + name +
                      "' parameter must lie in [0, 1]");
}

/** Embed a single-qubit operator at the 1-based target of an n-qubit register. */
ComplexMatrix embed(const ComplexMatrix& op, int qubit, std::size_t n) {
  if (qubit < 1 || static_cast<std::size_t>(qubit) > n)
    throw ConfigError("channel qubit index out of range");
  ComplexMatrix out = (qubit == 1) ? op : ComplexMatrix::identity(2);
  for (std::size_t q = 2; q <= n; ++q) {
    const ComplexMatrix& f =
        (static_cast<std::size_t>(qubit) == q) ? op : ComplexMatrix::identity(2);
    out = out.kron(f);
  }
  return n == 1 ? op : out;
}

KrausChannel make_single_qubit_channel(std::string label,
                                       std::vector<ComplexMatrix> local_ops,
                                       int qubit, std::size_t n) {
  KrausChannel ch;
  ch.label = std::move(label);
  ch.kraus_ops.reserve(local_ops.size());
  for (const ComplexMatrix& k : local_ops) ch.kraus_ops.push_back(embed(k, qubit, n));
  ch.validate();
  return ch;
}

ComplexMatrix scaled_pauli(Pauli p, double scale) {
  ComplexMatrix m = to_matrix(PauliString({p}));
  m *= Complex(scale, 0.0);
  return m;
}

}  // namespace

KrausChannel amplitude_damping(double gamma, int qubit, std::size_t n) {
  check_probability(gamma, "amplitude_damping");
  ComplexMatrix k0(2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix k1(2);
  k1(0, 1) = std::sqrt(gamma);
  return make_single_qubit_channel("amplitude_damping", {k0, k1}, qubit, n);
}

KrausChannel dephasing(double lambda, int qubit, std::size_t n) {
  check_probability(lambda, "dephasing");
  return make_single_qubit_channel(
      "dephasing",
      {scaled_pauli(Pauli::I, std::sqrt(1.0 - lambda)),
       scaled_pauli(Pauli::Z, std::sqrt(lambda))},
      qubit, n);
}

KrausChannel pauli_x(double p, int qubit, std::size_t n) {
  check_probability(p, "pauli_x");
  return make_single_qubit_channel(
      "pauli_x",
      {scaled_pauli(Pauli::I, std::sqrt(1.0 - p)),
       scaled_pauli(Pauli::X, std::sqrt(p))},
      qubit, n);
}

KrausChannel pauli_y(double p, int qubit, std::size_t n) {
  check_probability(p, "pauli_y");
  return make_single_qubit_channel(
      "pauli_y",
      {scaled_pauli(Pauli::I, std::sqrt(1.0 - p)),
       scaled_pauli(Pauli::Y, std::sqrt(p))},
      qubit, n);
}

KrausChannel depolarizing(double p, int qubit, std::size_t n) {
  check_probability(p, "depolarizing");
  return make_single_qubit_channel(
      "depolarizing",
      {scaled_pauli(Pauli::I, std::sqrt(1.0 - p)),
       scaled_pauli(Pauli::X, std::sqrt(p / 3.0)),
       scaled_pauli(Pauli::Y, std::sqrt(p / 3.0)),
       scaled_pauli(Pauli::Z, std::sqrt(p / 3.0))},
      qubit, n);
}

KrausChannel make_channel(const std::string& name, double param, int qubit,
                          std::size_t n) {
  if (name == "amplitude_damping") return amplitude_damping(param, qubit, n);
  if (name == "dephasing") return dephasing(param, qubit, n);
  if (name == "pauli_x") return pauli_x(param, qubit, n);
  if (name == "pauli_y") return pauli_y(param, qubit, n);
  if (name == "depolarizing") return depolarizing(param, qubit, n);
  throw ConfigError("unknown channel name '" + name + "'");
}

NoiseLocation noise_location_from_string(const std::string& text) {
  if (text == "after_gate_1") return NoiseLocation::AfterGate1;
  if (text == "after_gate_2") return NoiseLocation::AfterGate2;
  if (text == "after_entangler") return NoiseLocation::AfterEntangler;
  if (text == "end_of_prep") return NoiseLocation::EndOfPrep;
  throw ConfigError("unknown noise location '" + text + "'");
}

std::string to_string(NoiseLocation loc) {
  switch (loc) {
    case NoiseLocation::AfterGate1: return "after_gate_1";
    case NoiseLocation::AfterGate2: return "after_gate_2";
    case NoiseLocation::AfterEntangler: return "after_entangler";
    case NoiseLocation::EndOfPrep: return "end_of_prep";
  }
  throw std::logic_error("invalid noise location");
}

NoiseModel NoiseModel::parse(const std::string& text) {
  NoiseModel model;
  if (text.empty() || text == "none") return model;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    entry.erase(0, entry.find_first_not_of(" \t"));
    entry.erase(entry.find_last_not_of(" \t") + 1);
    if (entry.empty()) continue;
    NoiseLocation loc = NoiseLocation::EndOfPrep;
    std::string head = entry;
    if (const std::size_t at = entry.find('@'); at != std::string::npos) {
      head = entry.substr(0, at);
      loc = noise_location_from_string(entry.substr(at + 1));
    }
    std::vector<std::string> parts;
    std::stringstream hs(head);
    std::string part;
    while (std::getline(hs, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
      throw ConfigError("cannot parse noise entry '" + entry +
                        "' (expected name:param[:qubit][@location])");
    double param = 0.0;
    int qubit = 1;
    try {
      param = std::stod(parts[1]);
      if (parts.size() == 3) qubit = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse noise entry '" + entry + "'");
    }
    model.channels.emplace_back(loc, make_channel(parts[0], param, qubit));
  }
  return model;
}

std::vector<const KrausChannel*> NoiseModel::at(NoiseLocation loc) const {
  std::vector<const KrausChannel*> out;
  for (const auto& [l, ch] : channels)
    if (l == loc) out.push_back(&ch);
  return out;
}

ComplexMatrix single_qubit_rotation(double amplitude, double phase, int qubit,
                                    std::size_t n) {
  // exp(-i (a/2) A) = cos(a/2) I - i sin(a/2) A for the unit axis
  // A = cos(phase) X + sin(phase) Y.
  ComplexMatrix local(2);
  const double c = std::cos(amplitude / 2.0);
  const double s = std::sin(amplitude / 2.0);
  local(0, 0) = c;
  local(1, 1) = c;
  const Complex axis01(std::cos(phase), -std::sin(phase));  // X - i Y part
  local(0, 1) = Complex(0.0, -s) * axis01;
  local(1, 0) = Complex(0.0, -s) * std::conj(axis01);
  return embed(local, qubit, n);
}

ComplexMatrix bswap(double length, double phase) {
  ComplexMatrix u = ComplexMatrix::identity(4);
  const double c = std::cos(length / 2.0);
  const double s = std::sin(length / 2.0);
  u(0, 0) = c;
  u(3, 3) = c;
  u(0, 3) = Complex(0.0, -1.0) * Complex(std::cos(phase), -std::sin(phase)) * s;
  u(3, 0) = Complex(0.0, -1.0) * Complex(std::cos(phase), std::sin(phase)) * s;
  return u;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix{rho.n, u * rho.mat * u.adjoint()};
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
  ch.validate();
  ComplexMatrix out(rho.mat.dim());
  for (const ComplexMatrix& k : ch.kraus_ops) out += k * rho.mat * k.adjoint();
  return DensityMatrix{rho.n, std::move(out)};
}

DensityMatrix prepare_state(const AnsatzParams& params, const NoiseModel& noise,
                            double coherent_offset) {
  DensityMatrix rho = DensityMatrix::computational_ground(2);
  auto inject = [&](NoiseLocation loc) {
    for (const KrausChannel* ch : noise.at(loc)) rho = apply_channel(rho, *ch);
  };
  rho = apply_unitary(rho, single_qubit_rotation(params.theta[0], params.theta[1], 1));
  inject(NoiseLocation::AfterGate1);
  rho = apply_unitary(rho, single_qubit_rotation(params.theta[2], params.theta[3], 2));
  inject(NoiseLocation::AfterGate2);
  rho = apply_unitary(rho, bswap(params.theta[4], params.theta[5] + coherent_offset));
  inject(NoiseLocation::AfterEntangler);
  inject(NoiseLocation::EndOfPrep);
  return rho;
}

double expectation(const DensityMatrix& rho, const QubitOperator& op) {
  if (op.n_qubits() != rho.n)
    throw std::invalid_argument("expectation: operator/state qubit counts differ");
  if (!op.is_hermitian(1e-12))
    throw std::invalid_argument("expectation requires a Hermitian operator");
  const ComplexMatrix m = to_matrix(op);
  const std::size_t d = m.dim();
  Complex t = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t += m(r, c) * rho.mat(c, r);
  if (std::abs(t.imag()) >= 1e-9)
    throw NumericalError("expectation value has a significant imaginary part");
  return t.real();
}

double expectation(const DensityMatrix& rho, const PauliString& p) {
  QubitOperator op(p.n_qubits());
  op.add_term(p, 1.0);
  return expectation(rho, op);
}

double sample_correlator(const DensityMatrix& rho, const PauliString& p,
                         long shots, RngStream& rng) {
  if (shots < 1) throw std::invalid_argument("sample_correlator: shots must be >= 1");
  const double value = expectation(rho, p);
  if (value < -1.0 - 1e-9 || value > 1.0 + 1e-9)
    throw NumericalError("correlator outside [-1, 1]: corrupt state");
  const double prob = 0.5 * (1.0 + std::clamp(value, -1.0, 1.0));
  long successes = 0;
  for (long i = 0; i < shots; ++i)
    if (rng.bernoulli(prob)) ++successes;
  return 2.0 * static_cast<double>(successes) / static_cast<double>(shots) - 1.0;
}

namespace {

std::vector<PauliString> nonidentity_two_qubit_strings() {
  std::vector<PauliString> out;
  for (const PauliString& s : pauli_basis(2, 2).strings)
    if (!s.is_identity()) out.push_back(s);
  return out;
}

}  // namespace

DensityMatrix tomographic_reconstruct(
    const std::map<PauliString, double>& correlators) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (const PauliString& s : nonidentity_two_qubit_strings()) {
    const auto it = correlators.find(s);
    if (it == correlators.end())
      throw ConfigError("tomographic reconstruction is missing correlator '" +
                        s.str() + "'");
    if (it->second < -1.0 || it->second > 1.0)
      throw ConfigError("correlator '" + s.str() + "' outside [-1, 1]");
    const ComplexMatrix pm = to_matrix(s);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) += it->second * pm(r, c);
  }
  m *= Complex(0.25, 0.0);
  return DensityMatrix{2, std::move(m)};
}

std::map<PauliString, double> exact_correlators(const DensityMatrix& rho) {
  if (rho.n != 2)
    throw std::invalid_argument("exact_correlators expects a two-qubit state");
  std::map<PauliString, double> out;
  for (const PauliString& s : nonidentity_two_qubit_strings())
    out[s] = expectation(rho, s);
  return out;
}

}  // namespace molspec
