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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "molspec/errors.hpp"

namespace molspec {

namespace {

// Built-in coefficient dataset (see CoefficientRow): 45 distances,
// 0.05-0.55 Angstrom in steps of 0.05, then 0.65-3.95 in steps of 0.10.
// Kept verbatim in CSV form so the file loader and the embedded default
// share one code path.
constexpr const char* kEmbeddedCsv = R"(R,g0,g1,g2,g3,g4,g5
0.05,1.00777E+01,-1.05533E+00,-1.05533E+00,1.39333E-02,0,1.55708E-01
0.10,4.75665E+00,-1.02731E+00,-1.02731E+00,1.38667E-02,0,1.56170E-01
0.15,2.94817E+00,-9.84234E-01,-9.84234E-01,1.37610E-02,0,1.56930E-01
0.20,2.01153E+00,-9.30489E-01,-9.30489E-01,1.36238E-02,0,1.57973E-01
0.25,1.42283E+00,-8.70646E-01,-8.70646E-01,1.34635E-02,0,1.59277E-01
0.30,1.01018E+00,-8.08649E-01,-8.08649E-01,1.32880E-02,0,1.60818E-01
0.35,7.01273E-01,-7.47416E-01,-7.47416E-01,1.31036E-02,0,1.62573E-01
0.40,4.60364E-01,-6.88819E-01,-6.88819E-01,1.29140E-02,0,1.64515E-01
0.45,2.67547E-01,-6.33890E-01,-6.33890E-01,1.27192E-02,0,1.66621E-01
0.50,1.10647E-01,-5.83080E-01,-5.83080E-01,1.25165E-02,0,1.68870E-01
0.55,-1.83734E-02,-5.36489E-01,-5.36489E-01,1.23003E-02,0,1.71244E-01
0.65,-2.13932E-01,-4.55433E-01,-4.55433E-01,1.18019E-02,0,1.76318E-01
0.75,-3.49833E-01,-3.88748E-01,-3.88748E-01,1.11772E-02,0,1.81771E-01
0.85,-4.45424E-01,-3.33747E-01,-3.33747E-01,1.04061E-02,0,1.87562E-01
0.95,-5.13548E-01,-2.87796E-01,-2.87796E-01,9.50345E-03,0,1.93650E-01
1.05,-5.62600E-01,-2.48783E-01,-2.48783E-01,8.50998E-03,0,1.99984E-01
1.15,-5.97973E-01,-2.15234E-01,-2.15234E-01,7.47722E-03,0,2.06495E-01
1.25,-6.23223E-01,-1.86173E-01,-1.86173E-01,6.45563E-03,0,2.13102E-01
1.35,-6.40837E-01,-1.60926E-01,-1.60926E-01,5.48623E-03,0,2.19727E-01
1.45,-6.52661E-01,-1.38977E-01,-1.38977E-01,4.59760E-03,0,2.26294E-01
1.55,-6.60117E-01,-1.19894E-01,-1.19894E-01,3.80558E-03,0,2.32740E-01
1.65,-6.64309E-01,-1.03305E-01,-1.03305E-01,3.11545E-03,0,2.39014E-01
1.75,-6.66092E-01,-8.88906E-02,-8.88906E-02,2.52480E-03,0,2.45075E-01
1.85,-6.66126E-01,-7.63712E-02,-7.63712E-02,2.02647E-03,0,2.50896E-01
1.95,-6.64916E-01,-6.55065E-02,-6.55065E-02,1.61100E-03,0,2.56458E-01
2.05,-6.62844E-01,-5.60866E-02,-5.60866E-02,1.26812E-03,0,2.61750E-01
2.15,-6.60199E-01,-4.79275E-02,-4.79275E-02,9.88000E-04,0,2.66768E-01
2.25,-6.57196E-01,-4.08672E-02,-4.08672E-02,7.61425E-04,0,2.71512E-01
2.35,-6.53992E-01,-3.47636E-02,-3.47636E-02,5.80225E-04,0,2.75986E-01
2.45,-6.50702E-01,-2.94924E-02,-2.94924E-02,4.36875E-04,0,2.80199E-01
2.55,-6.47408E-01,-2.49459E-02,-2.49459E-02,3.25025E-04,0,2.84160E-01
2.65,-6.44165E-01,-2.10309E-02,-2.10309E-02,2.38800E-04,0,2.87881E-01
2.75,-6.41011E-01,-1.76672E-02,-1.76672E-02,1.73300E-04,0,2.91376E-01
2.85,-6.37971E-01,-1.47853E-02,-1.47853E-02,1.24200E-04,0,2.94658E-01
2.95,-6.35058E-01,-1.23246E-02,-1.23246E-02,8.78750E-05,0,2.97741E-01
3.05,-6.32279E-01,-1.02318E-02,-1.02317E-02,6.14500E-05,0,3.00638E-01
3.15,-6.29635E-01,-8.45958E-03,-8.45958E-03,4.24250E-05,0,3.03362E-01
3.25,-6.27126E-01,-6.96585E-03,-6.96585E-03,2.89500E-05,0,3.05927E-01
3.35,-6.24746E-01,-5.71280E-03,-5.71280E-03,1.95500E-05,0,3.08344E-01
3.45,-6.22491E-01,-4.66670E-03,-4.66670E-03,1.30500E-05,0,3.10625E-01
3.55,-6.20353E-01,-3.79743E-03,-3.79743E-03,8.57500E-06,0,3.12780E-01
3.65,-6.18325E-01,-3.07840E-03,-3.07840E-03,5.60000E-06,0,3.14819E-01
3.75,-6.16401E-01,-2.48625E-03,-2.48625E-03,3.60000E-06,0,3.16750E-01
3.85,-6.14575E-01,-2.00063E-03,-2.00062E-03,2.27500E-06,0,3.18581E-01
3.95,-6.12839E-01,-1.60393E-03,-1.60392E-03,1.42500E-06,0,3.20320E-01
)";

double parse_value(const std::string& text, const std::string& origin,
                   std::size_t line_no) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(origin + ":" + std::to_string(line_no) +
                      ": cannot parse number '" + text + "'");
  }
  // Allow trailing whitespace only; reject e.g. "1.0x".
  for (std::size_t i = consumed; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": cannot parse number '" + text + "'");
  if (!std::isfinite(v))
    throw ConfigError(origin + ":" + std::to_string(line_no) +
                      ": non-finite value '" + text + "'");
  return v;
}

}  // namespace

MoleculeTable::MoleculeTable(std::vector<CoefficientRow> rows)
    : rows_(std::move(rows)) {}

MoleculeTable MoleculeTable::parse_csv(std::istream& in,
                                       const std::string& origin) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<CoefficientRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // Skip blanks and comment lines (output files carry a '#' header).
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (!header_seen) {
      std::string squashed;
      for (char c : trimmed)
        if (!std::isspace(static_cast<unsigned char>(c))) squashed.push_back(c);
      if (squashed != "R,g0,g1,g2,g3,g4,g5")
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": expected header R,g0,g1,g2,g3,g4,g5");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(trimmed);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7)
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 7 comma-separated values, got " +
                        std::to_string(fields.size()));
    CoefficientRow row{};
    row.R = parse_value(fields[0], origin, line_no);
    row.g0 = parse_value(fields[1], origin, line_no);
    row.g1 = parse_value(fields[2], origin, line_no);
    row.g2 = parse_value(fields[3], origin, line_no);
    row.g3 = parse_value(fields[4], origin, line_no);
    row.g4 = parse_value(fields[5], origin, line_no);
    row.g5 = parse_value(fields[6], origin, line_no);
    rows.push_back(row);
  }
  if (!header_seen) throw ConfigError(origin + ": empty table");
  if (rows.empty()) throw ConfigError(origin + ": table has a header but no rows");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].R > rows[i - 1].R))
      throw ConfigError(origin + ": R values must be strictly increasing (row " +
                        std::to_string(i + 1) + ")");
  return MoleculeTable(std::move(rows));
}

MoleculeTable MoleculeTable::embedded() {
  static const MoleculeTable table = [] {
    std::istringstream in(kEmbeddedCsv);
    return parse_csv(in, "<embedded>");
  }();
  return table;
}

MoleculeTable MoleculeTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file '" + path + "'");
  return parse_csv(in, path);
}

const CoefficientRow& MoleculeTable::row_at(double R) const {
  for (const CoefficientRow& row : rows_)
    if (std::abs(row.R - R) <= 1e-9) return row;
  std::ostringstream msg;
  msg << "no table row at R = " << R
      << " (distances are tabulated only; no interpolation)";
  throw ConfigError(msg.str());
}

QubitOperator hamiltonian_from_row(const CoefficientRow& row) {
  QubitOperator h(2);
  h.add_term("II", row.g0);
  h.add_term("ZI", row.g1);
  h.add_term("IZ", row.g2);
  h.add_term("ZZ", row.g3);
  h.add_term("YY", row.g4);
  h.add_term("XX", row.g5);
  return h;
}

QubitOperator hamiltonian_at(const MoleculeTable& table, double R) {
  return hamiltonian_from_row(table.row_at(R));
}

MoleculeTable MoleculeTable::subset(const std::vector<double>& r_values) const {
  if (r_values.empty())
    throw ConfigError("table subset: no distances requested");
  std::vector<CoefficientRow> rows;
  rows.reserve(r_values.size());
  for (double R : r_values) rows.push_back(row_at(R));
  std::sort(rows.begin(), rows.end(),
            [](const CoefficientRow& a, const CoefficientRow& b) {
              return a.R < b.R;
            });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].R > rows[i - 1].R))
      throw ConfigError("table subset: duplicate distance requested");
  return MoleculeTable(std::move(rows));
}

std::array<double, 4> exact_spectrum(const CoefficientRow& row) {
  const EigenDecomposition ed = eigh(to_matrix(hamiltonian_from_row(row)));
  return {ed.eigenvalues[0], ed.eigenvalues[1], ed.eigenvalues[2],
          ed.eigenvalues[3]};
}

std::array<double, 4> exact_spectrum(const MoleculeTable& table, double R) {
  return exact_spectrum(table.row_at(R));
}

std::array<double, 4> analytic_spectrum(const CoefficientRow& row) {
  const double even_gap = std::hypot(row.g1 + row.g2, row.g5 - row.g4);
  const double odd_gap = std::hypot(row.g1 - row.g2, row.g5 + row.g4);
  std::array<double, 4> out = {
      row.g0 + row.g3 - even_gap, row.g0 + row.g3 + even_gap,
      row.g0 - row.g3 - odd_gap, row.g0 - row.g3 + odd_gap};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace molspec
