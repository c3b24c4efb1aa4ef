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

#include <string>
#include <vector>

#include "molspec/hamiltonian.hpp"
#include "molspec/quantum_state.hpp"
#include "molspec/vqe.hpp"

namespace molspec {

/**
 * Effective settings for one CLI run. Values resolve in three layers:
 * built-in defaults, then the optional config file (flat `key=value`
 * lines, `#` comments), then command-line flags. Unknown keys are a
 * ConfigError — a misspelled knob must never silently fall back to its
 * default.
 */
struct RunConfig {
  // Data selection.
  std::string table_source = "embedded";  ///< "embedded" or a CSV path
  std::vector<double> r_values;           ///< empty means every table row

  // Reproducibility.
  bool seed_set = false;  ///< the seed has no default; runs must pin one

  // Swarm optimizer (seed lives in swarm.seed).
  SwarmConfig swarm;
  SweepOptions sweep;

  // Physics knobs.
  std::string noise_text = "none";
  NoiseModel noise;
  double coherent_offset = 0.0;

  // Measurement model.
  EvalSpec eval = EvalSpec::exact();

  // Subspace expansion.
  std::vector<std::string> op_labels = {"linear_response"};
  double cutoff = 1e-8;

  // Histogram / peak finding.
  double bin_width = 1.5e-3;
  double smooth_sigma = 7.5e-3;
  double prominence = 0.05;

  // File plumbing.
  std::string out_dir = ".";
  std::string in_path;      ///< hist input CSV
  std::string states_path;  ///< qse: sweep.json with swarm end states
};

/** Apply one `key=value` assignment; ConfigError on unknown keys or
 *  unparseable values. This is the single authority for every key. */
void apply_entry(RunConfig& config, const std::string& key,
                 const std::string& value);

/** Read a flat key=value file (blank lines and `#` comments skipped). */
void apply_file(RunConfig& config, const std::string& path);

/**
 * The effective configuration as sorted `key=value` lines, one per key,
 * rendered deterministically. This text — not the file the user wrote —
 * is what the output digest is computed over, so reruns with an
 * equivalent flag/file split hash identically.
 */
std::string canonical_text(const RunConfig& config);

/** The configured coefficient table (embedded or loaded from disk). */
MoleculeTable load_table(const RunConfig& config);

/** The configured distances, or every table row when none were given. */
std::vector<double> resolve_r_values(const RunConfig& config,
                                     const MoleculeTable& table);

/** ConfigError unless a seed was supplied (context names the command). */
void require_seed(const RunConfig& config, const std::string& context);

}  // namespace molspec
