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

#include "molspec/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "molspec/errors.hpp"
#include "molspec/version.hpp"

namespace molspec {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex16(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string config_digest(const RunConfig& config) {
  return hex16(fnv1a64(canonical_text(config)));
}

std::string output_header(const std::string& digest) {
  return std::string("# molspec ") + kVersion + " config=" + digest + "\n";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec)
    throw ConfigError("cannot create output directory '" + path +
                      "': " + ec.message());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

Json tagged_json(const std::string& digest) {
  Json j;
  j["version"] = kVersion;
  j["config_digest"] = digest;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json density_to_json(const DensityMatrix& rho) {
  const std::size_t d = rho.mat.dim();
  Json j;
  j["n"] = rho.n;
  std::vector<double> re, im;
  re.reserve(d * d);
  im.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      re.push_back(rho.mat(r, c).real());
      im.push_back(rho.mat(r, c).imag());
    }
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("re") || !j.contains("im"))
    throw ConfigError("density matrix JSON needs fields n, re, im");
  const auto n = j.at("n").get<std::size_t>();
  const std::size_t d = std::size_t{1} << n;
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != d * d || im.size() != d * d)
    throw ConfigError("density matrix JSON has wrong element count");
  DensityMatrix rho;
  rho.n = n;
  rho.mat = ComplexMatrix(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      rho.mat(r, c) = Complex(re[r * d + c], im[r * d + c]);
  rho.validate();
  return rho;
}

std::vector<double> read_energy_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::vector<double> energies;
  std::string line;
  std::size_t line_no = 0;
  int energy_column = 0;
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::vector<std::string> fields;
    std::stringstream ss(trimmed);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.empty()) continue;

    if (!header_checked) {
      header_checked = true;
      // A non-numeric first row is a header; locate the `energy` column.
      std::size_t consumed = 0;
      bool numeric = true;
      try {
        (void)std::stod(fields[0], &consumed);
        for (std::size_t i = consumed; i < fields[0].size(); ++i)
          if (!std::isspace(static_cast<unsigned char>(fields[0][i])))
            numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) {
        energy_column = -1;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          std::string name = fields[i];
          name.erase(0, name.find_first_not_of(" \t"));
          name.erase(name.find_last_not_of(" \t") + 1);
          if (name == "energy") energy_column = static_cast<int>(i);
        }
        if (energy_column < 0)
          throw ConfigError(path + ": header row has no 'energy' column");
        continue;  // header consumed
      }
    }

    if (static_cast<std::size_t>(energy_column) >= fields.size())
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": row is missing the energy column");
    const std::string& cell = fields[static_cast<std::size_t>(energy_column)];
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &consumed);
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": cannot parse energy '" + cell + "'");
    }
    for (std::size_t i = consumed; i < cell.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(cell[i])))
        throw ConfigError(path + ":" + std::to_string(line_no) +
                          ": cannot parse energy '" + cell + "'");
    if (!std::isfinite(v))
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": non-finite energy");
    energies.push_back(v);
  }
  if (energies.empty()) throw ConfigError(path + ": no energy values found");
  return energies;
}

}  // namespace molspec
