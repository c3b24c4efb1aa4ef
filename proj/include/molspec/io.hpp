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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "molspec/config.hpp"
#include "molspec/quantum_state.hpp"

#include <json.hpp>

namespace molspec {

/// Insertion-ordered JSON so output files are byte-stable.
using Json = nlohmann::ordered_json;

/** FNV-1a 64-bit hash of the given text. */
std::uint64_t fnv1a64(std::string_view text);

/** Lower-case 16-hex-digit rendering, zero padded. */
std::string hex16(std::uint64_t value);

/** hex16(fnv1a64(canonical_text(config))) — stamped into every output. */
std::string config_digest(const RunConfig& config);

/** First line of every CSV output: "# molspec <version> config=<digest>". */
std::string output_header(const std::string& digest);

/** Format one numeric cell (9 significant digits, '.' decimal, no locale). */
std::string format_double(double value);

/** Create the directory (and parents) if needed; ConfigError on failure. */
void ensure_directory(const std::string& path);

/** Write the bytes exactly as given (binary mode); ConfigError on failure. */
void write_text_file(const std::string& path, const std::string& content);

/** Json skeleton carrying the version and config digest fields. */
Json tagged_json(const std::string& digest);

/** Serialize with 2-space indent and a trailing newline. */
std::string dump_json(const Json& j);

/** Density matrix as {"n", "re": [...], "im": [...]} (row-major). */
Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

/**
 * Read an energy column from a CSV/text file: `#` comments and blank
 * lines are skipped; with a header row the `energy` column is used,
 * otherwise the first column must be numeric. ConfigError when the file
 * cannot be read or yields no values.
 */
std::vector<double> read_energy_column(const std::string& path);

}  // namespace molspec
