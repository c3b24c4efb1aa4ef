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

#include "molspec/hamiltonian.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "molspec/errors.hpp"

using namespace molspec;

TEST_SUITE("hamiltonian") {

TEST_CASE("embedded table covers 45 distances with symmetric couplings") {
  const MoleculeTable table = MoleculeTable::embedded();
  REQUIRE(table.size() == 45);
  CHECK(table.rows().front().R == doctest::Approx(0.05));
  CHECK(table.rows().back().R == doctest::Approx(3.95));
  for (const CoefficientRow& row : table.rows()) {
    CHECK(row.g4 == 0.0);
    // Molecular symmetry: the two single-qubit Z couplings agree to the
    // table's printed precision (six significant figures).
    CHECK(std::abs(row.g1 - row.g2) < 2e-7);
  }
}

TEST_CASE("known coefficient row reads back exactly") {
  const CoefficientRow& row = MoleculeTable::embedded().row_at(0.75);
  CHECK(row.g0 == doctest::Approx(-0.349833).epsilon(1e-6));
  CHECK(row.g1 == doctest::Approx(-0.388748).epsilon(1e-6));
  CHECK(row.g2 == doctest::Approx(-0.388748).epsilon(1e-6));
  CHECK(row.g3 == doctest::Approx(0.0111772).epsilon(1e-6));
  CHECK(row.g5 == doctest::Approx(0.181771).epsilon(1e-6));
}

TEST_CASE("distances are matched exactly, never interpolated") {
  const MoleculeTable table = MoleculeTable::embedded();
  CHECK_NOTHROW(table.row_at(1.55));
  CHECK_THROWS_AS(table.row_at(0.60), ConfigError);
  CHECK_THROWS_AS(table.row_at(4.05), ConfigError);
}

TEST_CASE("subset keeps requested rows sorted and validated") {
  const MoleculeTable table = MoleculeTable::embedded();
  const MoleculeTable sub = table.subset({0.85, 0.65, 0.75});
  REQUIRE(sub.size() == 3);
  CHECK(sub.rows()[0].R == doctest::Approx(0.65));
  CHECK(sub.rows()[2].R == doctest::Approx(0.85));
  CHECK_THROWS_AS(table.subset({0.75, 0.75}), ConfigError);
  CHECK_THROWS_AS(table.subset({0.60}), ConfigError);
  CHECK_THROWS_AS(table.subset({}), ConfigError);
}

TEST_CASE("operator assembly drops zero couplings") {
  const CoefficientRow& row = MoleculeTable::embedded().row_at(0.75);
  const QubitOperator h = hamiltonian_from_row(row);
  CHECK(h.size() == 5);  // g4 = 0 leaves no YY term
  CHECK(h.coefficient(PauliString::parse("XX")).real() ==
        doctest::Approx(row.g5));
  CHECK(h.coefficient(PauliString::parse("YY")) == Complex(0, 0));
  CHECK(h.is_hermitian());
}

TEST_CASE("closed-form and dense spectra agree on every row") {
  const MoleculeTable table = MoleculeTable::embedded();
  double worst = 0.0;
  for (const CoefficientRow& row : table.rows()) {
    const std::array<double, 4> a = analytic_spectrum(row);
    const std::array<double, 4> e = exact_spectrum(row);
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - e[i]));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("ground energies hit the frozen reference values") {
  const MoleculeTable table = MoleculeTable::embedded();
  const std::array<double, 4> s075 = exact_spectrum(table, 0.75);
  CHECK(s075[0] == doctest::Approx(-1.137117275).epsilon(1e-8));
  CHECK(s075[1] == doctest::Approx(-0.5427812).epsilon(1e-6));
  CHECK(s075[2] == doctest::Approx(-0.1792392).epsilon(1e-6));
  CHECK(s075[3] == doctest::Approx(0.45980567).epsilon(1e-6));
  CHECK(exact_spectrum(table, 1.55)[0] ==
        doctest::Approx(-0.990476338).epsilon(1e-8));
  CHECK(exact_spectrum(table, 3.95)[0] ==
        doctest::Approx(-0.933173637).epsilon(1e-8));
}

TEST_CASE("the binding curve has its minimum at an interior distance") {
  const MoleculeTable table = MoleculeTable::embedded();
  double best_R = 0.0;
  double best_E = 1e9;
  double prev = 0.0;
  bool first = true;
  for (const CoefficientRow& row : table.rows()) {
    const double e0 = analytic_spectrum(row)[0];
    if (e0 < best_E) {
      best_E = e0;
      best_R = row.R;
    }
    // Past the steep repulsive wall the curve varies gently between
    // neighbouring table rows.
    if (!first && row.R > 0.5) CHECK(std::abs(e0 - prev) < 0.2);
    prev = e0;
    first = false;
  }
  CHECK(best_R == doctest::Approx(0.75));
}

TEST_CASE("CSV parsing enforces the header and row structure") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return MoleculeTable::parse_csv(in, "<test>");
  };
  const MoleculeTable ok = parse(
      "R,g0,g1,g2,g3,g4,g5\n"
      "# comment rows are fine\n"
      "1.0,0.5,-0.1,-0.1,0.01,0,0.2\n"
      "2.0,0.4,-0.05,-0.05,0.005,0,0.25\n");
  CHECK(ok.size() == 2);
  CHECK(ok.row_at(2.0).g5 == doctest::Approx(0.25));

  CHECK_THROWS_AS(parse(""), ConfigError);
  CHECK_THROWS_AS(parse("R,g0,g1,g2,g3,g4,g5\n"), ConfigError);
  CHECK_THROWS_AS(parse("x,y\n1,2\n"), ConfigError);
  CHECK_THROWS_AS(parse("R,g0,g1,g2,g3,g4,g5\n1.0,0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("R,g0,g1,g2,g3,g4,g5\n1.0,0,0,0,0,0,oops\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("R,g0,g1,g2,g3,g4,g5\n"
                        "2.0,0,0,0,0,0,0\n"
                        "1.0,0,0,0,0,0,0\n"),
                  ConfigError);
  CHECK_THROWS_AS(MoleculeTable::load("/nonexistent/table.csv"), ConfigError);
}

}  // TEST_SUITE
