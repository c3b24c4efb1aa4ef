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

#include <iosfwd>
#include <string>
#include <vector>

#include "molspec/config.hpp"

namespace molspec {

/**
 * Full command-line entry point, minus argv[0]. Returns the process exit
 * code: 0 on success, 2 for configuration/usage faults, 3 for numerical
 * or other runtime failures. Errors are reported on `err`; normal command
 * output (the spurious-state report) goes to `out`. All file outputs are
 * deterministic: a rerun with the same arguments is byte-identical.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/** run_cli writing to std::cout / std::cerr. */
int run_cli(const std::vector<std::string>& args);

/** Exact four-level spectrum per distance -> <out>/spectrum.csv. */
void cmd_exact(const RunConfig& config);

/** Swarm ground-state run at one distance -> vqe.json, trajectory.csv. */
void cmd_vqe(const RunConfig& config);

/** Warm-started scan over the table -> sweep.csv, error_report.csv,
 *  sweep.json (which qse can consume via --states). */
void cmd_sweep(const RunConfig& config);

/**
 * Subspace-expansion spectra. Without --states: per configured distance,
 * the exact ground state (run through the configured noise channels, in
 * listed order) is expanded in each configured operator set ->
 * qse.json, qse_compare.csv. With --states <sweep.json>: every stored
 * swarm end state is expanded instead -> qse_energies.csv.
 */
void cmd_qse(const RunConfig& config);

/** Fixed worked example of spurious states and their removal (stdout). */
void cmd_spurious_demo(std::ostream& out);

/** Histogram + peak finding over an energy list -> hist.csv, peaks.csv. */
void cmd_hist(const RunConfig& config);

}  // namespace molspec
