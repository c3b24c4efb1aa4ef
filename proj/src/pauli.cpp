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

#include "molspec/pauli.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "molspec/errors.hpp"

namespace molspec {

char pauli_to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli value");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ConfigError(std::string("invalid Pauli letter '") + c +
                        "' (expected I, X, Y or Z)");
  }
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty())
    throw std::invalid_argument("PauliString requires at least one qubit");
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ConfigError("empty Pauli string");
  std::vector<Pauli> ops;
  ops.reserve(text.size());
  for (char c : text) ops.push_back(pauli_from_char(c));
  return PauliString(std::move(ops));
}

PauliString PauliString::identity(std::size_t n) {
  return PauliString(std::vector<Pauli>(n, Pauli::I));
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(
      std::count_if(ops_.begin(), ops_.end(),
                    [](Pauli p) { return p != Pauli::I; }));
}

Pauli PauliString::factor(std::size_t qubit) const {
  if (qubit < 1 || qubit > ops_.size())
    throw std::invalid_argument("qubit index out of range");
  return ops_[qubit - 1];
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(pauli_to_char(p));
  return s;
}

namespace {

// Single-qubit product table: result[a][b] = (power of i, product letter)
// for matrix(a)*matrix(b) = i^power * matrix(product).
struct FactorProduct {
  int i_power;
  Pauli result;
};

constexpr FactorProduct kProductTable[4][4] = {
    // a = I
    {{0, Pauli::I}, {0, Pauli::X}, {0, Pauli::Y}, {0, Pauli::Z}},
    // a = X
    {{0, Pauli::X}, {0, Pauli::I}, {1, Pauli::Z}, {3, Pauli::Y}},
    // a = Y
    {{0, Pauli::Y}, {3, Pauli::Z}, {0, Pauli::I}, {1, Pauli::X}},
    // a = Z
    {{0, Pauli::Z}, {1, Pauli::Y}, {3, Pauli::X}, {0, Pauli::I}},
};

constexpr Complex kPhases[4] = {Complex(1.0, 0.0), Complex(0.0, 1.0),
                                Complex(-1.0, 0.0), Complex(0.0, -1.0)};

}  // namespace

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("Pauli product: qubit counts differ");
  std::vector<Pauli> out;
  out.reserve(a.n_qubits());
  int i_power = 0;
  for (std::size_t k = 0; k < a.n_qubits(); ++k) {
    const FactorProduct fp =
        kProductTable[static_cast<int>(a.ops()[k])][static_cast<int>(b.ops()[k])];
    i_power = (i_power + fp.i_power) % 4;
    out.push_back(fp.result);
  }
  return PauliProduct{kPhases[i_power], PauliString(std::move(out))};
}

namespace {

ComplexMatrix single_pauli_matrix(Pauli p) {
  ComplexMatrix m(2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

}  // namespace

ComplexMatrix to_matrix(const PauliString& p) {
  ComplexMatrix m = single_pauli_matrix(p.ops()[0]);
  for (std::size_t k = 1; k < p.n_qubits(); ++k)
    m = m.kron(single_pauli_matrix(p.ops()[k]));
  return m;
}

void QubitOperator::add_term(const PauliString& string, Complex coeff) {
  if (string.n_qubits() != n_)
    throw std::invalid_argument("operator term has wrong qubit count");
  if (coeff == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.emplace(string, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

void QubitOperator::add_term(std::string_view text, Complex coeff) {
  add_term(PauliString::parse(text), coeff);
}

Complex QubitOperator::coefficient(const PauliString& string) const {
  const auto it = terms_.find(string);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

bool QubitOperator::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& other) {
  if (other.n_ != n_) throw std::invalid_argument("operator sum: qubit counts differ");
  for (const auto& [string, coeff] : other.terms_) add_term(string, coeff);
  return *this;
}

QubitOperator& QubitOperator::operator*=(Complex scale) {
  if (scale == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [string, coeff] : terms_) coeff *= scale;
  return *this;
}

ComplexMatrix to_matrix(const QubitOperator& op, std::size_t max_qubits) {
  if (op.n_qubits() > max_qubits)
    throw std::invalid_argument("to_matrix: qubit count exceeds the dense cap");
  const std::size_t d = std::size_t(1) << op.n_qubits();
  ComplexMatrix m(d);
  for (const auto& [string, coeff] : op.terms()) {
    const ComplexMatrix pm = to_matrix(string);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const Complex e = pm(r, c);
        if (e != Complex(0.0, 0.0)) m(r, c) += coeff * e;
      }
  }
  return m;
}

bool canonical_less(const PauliString& a, const PauliString& b) {
  const std::size_t wa = a.weight();
  const std::size_t wb = b.weight();
  if (wa != wb) return wa < wb;
  // Letter rank X < Y < Z < I: identity factors sort last so the set
  // enumerates qubit-1 flips before qubit-2 flips.
  auto rank = [](Pauli p) { return p == Pauli::I ? 3 : static_cast<int>(p) - 1; };
  for (std::size_t k = 0; k < a.n_qubits() && k < b.n_qubits(); ++k) {
    const int ra = rank(a.ops()[k]);
    const int rb = rank(b.ops()[k]);
    if (ra != rb) return ra < rb;
  }
  return a.n_qubits() < b.n_qubits();
}

OperatorSet pauli_basis(std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("pauli_basis: need n >= 1");
  if (k > n) throw std::invalid_argument("pauli_basis: need k <= n");
  std::vector<PauliString> all;
  std::vector<Pauli> current(n, Pauli::I);
  // Enumerate all 4^n strings, keep weight <= k, then canonical-sort.
  const std::size_t total = std::size_t(1) << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t q = 0; q < n; ++q) {
      current[q] = static_cast<Pauli>(c & 3);
      c >>= 2;
    }
    PauliString s{current};
    if (s.weight() <= k) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end(), canonical_less);
  OperatorSet set;
  set.strings = std::move(all);
  set.label = "pauli_basis_" + std::to_string(n) + "_" + std::to_string(k);
  set.order = k;
  return set;
}

namespace {

OperatorSet make_set(const std::string& label,
                     std::initializer_list<const char*> texts) {
  OperatorSet set;
  set.label = label;
  for (const char* t : texts) {
    PauliString s = PauliString::parse(t);
    set.order = std::max(set.order, s.weight());
    set.strings.push_back(std::move(s));
  }
  return set;
}

}  // namespace

OperatorSet named_set(const std::string& label) {
  if (label == "linear_response") {
    OperatorSet set = pauli_basis(2, 1);
    set.label = label;
    return set;
  }
  if (label == "full_p2") {
    OperatorSet set = pauli_basis(2, 2);
    set.label = label;
    return set;
  }
  if (label == "lr_plus_xx")
    return make_set(label, {"II", "XI", "YI", "ZI", "IX", "IY", "IZ", "XX"});
  if (label == "si_nine")
    return make_set(label,
                    {"II", "XI", "YI", "IX", "IZ", "XX", "XZ", "YX", "YZ"});
  if (label == "si_six") return make_set(label, {"II", "XI", "ZI", "IZ", "XZ", "ZZ"});
  if (label == "zz_pair") return make_set(label, {"II", "ZZ"});
  if (label == "single_x") return make_set(label, {"II", "XI", "IX"});
  if (label == "single_y") return make_set(label, {"II", "YI", "IY"});
  if (label == "single_z") return make_set(label, {"II", "ZI", "IZ"});
  throw ConfigError("unknown operator set label '" + label + "'");
}

std::vector<std::string> registered_set_names() {
  return {"full_p2", "linear_response", "lr_plus_xx", "si_nine", "si_six",
          "single_x", "single_y", "single_z", "zz_pair"};
}

OperatorSet set_from_strings(const std::string& label,
                             const std::vector<std::string>& texts) {
  if (texts.empty()) throw ConfigError("operator set '" + label + "' is empty");
  OperatorSet set;
  set.label = label;
  for (const std::string& t : texts) {
    PauliString s = PauliString::parse(t);
    if (std::find(set.strings.begin(), set.strings.end(), s) != set.strings.end())
      throw ConfigError("operator set '" + label + "' repeats string '" + t + "'");
    set.order = std::max(set.order, s.weight());
    set.strings.push_back(std::move(s));
  }
  return set;
}

}  // namespace molspec
