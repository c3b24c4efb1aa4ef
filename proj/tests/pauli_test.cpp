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

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "molspec/errors.hpp"
#include "molspec/rng.hpp"

using namespace molspec;

namespace {

PauliString random_string(RngStream& rng, std::size_t n) {
  std::vector<Pauli> ops;
  for (std::size_t i = 0; i < n; ++i)
    ops.push_back(static_cast<Pauli>(rng.next_u64() % 4));
  return PauliString(std::move(ops));
}

double matrix_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("letter conversion round-trips and rejects junk") {
  for (char c : {'I', 'X', 'Y', 'Z'})
    CHECK(pauli_to_char(pauli_from_char(c)) == c);
  CHECK_THROWS_AS(pauli_from_char('Q'), ConfigError);
  CHECK_THROWS_AS(pauli_from_char('x'), ConfigError);
}

TEST_CASE("string parse/str round-trip, weight, and factor indexing") {
  const PauliString p = PauliString::parse("XIZ");
  CHECK(p.n_qubits() == 3);
  CHECK(p.weight() == 2);
  CHECK(p.str() == "XIZ");
  CHECK(p.factor(1) == Pauli::X);  // qubit 1 is the left factor
  CHECK(p.factor(2) == Pauli::I);
  CHECK(p.factor(3) == Pauli::Z);
  CHECK(PauliString::identity(4).is_identity());
  CHECK_THROWS_AS(PauliString::parse(""), ConfigError);
  CHECK_THROWS_AS(PauliString::parse("XA"), ConfigError);
}

TEST_CASE("single-qubit products match the algebra") {
  auto check = [](const char* a, const char* b, Complex phase, const char* prod) {
    const PauliProduct r = multiply(PauliString::parse(a), PauliString::parse(b));
    CHECK(r.phase == phase);
    CHECK(r.string.str() == prod);
  };
  const Complex i(0, 1);
  check("X", "Y", i, "Z");
  check("Y", "X", -i, "Z");
  check("Y", "Z", i, "X");
  check("Z", "X", i, "Y");
  check("X", "X", Complex(1, 0), "I");
  check("X", "I", Complex(1, 0), "X");
  check("XX", "YY", Complex(-1, 0), "ZZ");  // phases i*i multiply
  check("ZI", "IZ", Complex(1, 0), "ZZ");
}

TEST_CASE("products agree with dense matrices and associate") {
  RngStream rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const PauliString a = random_string(rng, 2);
    const PauliString b = random_string(rng, 2);
    const PauliString c = random_string(rng, 2);

    const PauliProduct ab = multiply(a, b);
    ComplexMatrix lhs = to_matrix(a) * to_matrix(b);
    ComplexMatrix rhs = to_matrix(ab.string);
    rhs *= ab.phase;
    CHECK(matrix_distance(lhs, rhs) < 1e-14);

    const PauliProduct ab_c = multiply(ab.string, c);
    const PauliProduct bc = multiply(b, c);
    const PauliProduct a_bc = multiply(a, bc.string);
    CHECK(ab_c.string == a_bc.string);
    CHECK(ab.phase * ab_c.phase == bc.phase * a_bc.phase);
  }
}

TEST_CASE("two-qubit strings are trace-orthogonal: Tr[P^dag Q] = 4 delta") {
  const OperatorSet basis = pauli_basis(2, 2);
  REQUIRE(basis.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const Complex t =
          (to_matrix(basis.strings[i]).adjoint() * to_matrix(basis.strings[j]))
              .trace();
      const Complex expected = (i == j) ? Complex(4, 0) : Complex(0, 0);
      CHECK(std::abs(t - expected) < 1e-14);
    }
  }
}

TEST_CASE("operator terms accumulate, cancel, and convert to matrices") {
  QubitOperator op(2);
  op.add_term("XX", 0.5);
  op.add_term("XX", 0.25);
  op.add_term("ZI", 1.0);
  op.add_term("ZI", -1.0);  // exact cancellation drops the term
  CHECK(op.size() == 1);
  CHECK(op.coefficient(PauliString::parse("XX")) == Complex(0.75, 0));
  CHECK(op.coefficient(PauliString::parse("ZI")) == Complex(0, 0));
  CHECK(op.is_hermitian());

  op.add_term("YI", Complex(0, 0.125));
  CHECK_FALSE(op.is_hermitian());
  CHECK(op.is_hermitian(0.2));

  QubitOperator sum(2);
  sum.add_term("II", 2.0);
  sum += op;
  sum *= 2.0;
  CHECK(sum.coefficient(PauliString::parse("II")) == Complex(4, 0));
  CHECK(sum.coefficient(PauliString::parse("XX")) == Complex(1.5, 0));

  QubitOperator zz(2);
  zz.add_term("ZZ", 1.0);
  const ComplexMatrix m = to_matrix(zz);
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(1, 1) == Complex(-1, 0));
  CHECK(m(2, 2) == Complex(-1, 0));
  CHECK(m(3, 3) == Complex(1, 0));
}

TEST_CASE("canonical order is weight-major with X < Y < Z < I letters") {
  const OperatorSet lr = pauli_basis(2, 1);
  std::vector<std::string> got;
  for (const PauliString& p : lr.strings) got.push_back(p.str());
  const std::vector<std::string> expected = {"II", "XI", "YI", "ZI",
                                             "IX", "IY", "IZ"};
  CHECK(got == expected);

  CHECK(canonical_less(PauliString::parse("XI"), PauliString::parse("IX")));
  CHECK(canonical_less(PauliString::parse("IZ"), PauliString::parse("XX")));
  CHECK_FALSE(canonical_less(PauliString::parse("XX"), PauliString::parse("XX")));
}

TEST_CASE("weight-truncated basis sizes follow sum C(n,j) 3^j") {
  CHECK(pauli_basis(2, 0).size() == 1);
  CHECK(pauli_basis(2, 1).size() == 7);
  CHECK(pauli_basis(2, 2).size() == 16);
  CHECK(pauli_basis(3, 1).size() == 10);
  CHECK(pauli_basis(1, 1).size() == 4);
  CHECK_THROWS(pauli_basis(0, 0));
  CHECK_THROWS(pauli_basis(2, 3));
}

TEST_CASE("named sets have the documented contents") {
  CHECK(named_set("linear_response").size() == 7);
  CHECK(named_set("lr_plus_xx").size() == 8);
  CHECK(named_set("full_p2").size() == 16);

  std::vector<std::string> six;
  for (const PauliString& p : named_set("si_six").strings) six.push_back(p.str());
  CHECK(six == std::vector<std::string>{"II", "XI", "ZI", "IZ", "XZ", "ZZ"});

  std::vector<std::string> nine;
  for (const PauliString& p : named_set("si_nine").strings) nine.push_back(p.str());
  CHECK(nine == std::vector<std::string>{"II", "XI", "YI", "IX", "IZ", "XX",
                                         "XZ", "YX", "YZ"});

  std::vector<std::string> zz;
  for (const PauliString& p : named_set("zz_pair").strings) zz.push_back(p.str());
  CHECK(zz == std::vector<std::string>{"II", "ZZ"});

  CHECK(named_set("single_x").size() == 3);
  CHECK_THROWS_AS(named_set("octopus"), ConfigError);

  const std::vector<std::string> names = registered_set_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const std::string& name : names) CHECK(named_set(name).size() >= 2);
}

TEST_CASE("explicit set construction rejects duplicates and empties") {
  const OperatorSet s = set_from_strings("custom", {"II", "XY", "ZZ"});
  CHECK(s.size() == 3);
  CHECK(s.label == "custom");
  CHECK_THROWS_AS(set_from_strings("dup", {"XX", "XX"}), ConfigError);
  CHECK_THROWS_AS(set_from_strings("none", {}), ConfigError);
}

}  // TEST_SUITE
