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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "molspec/ansatz.hpp"
#include "molspec/hamiltonian.hpp"
#include "molspec/quantum_state.hpp"

namespace molspec {

/** How objective energies are evaluated. */
enum class EvalMode { Exact, Sampled };

/** Exact expectation values, or finite-shot correlator estimates. */
struct EvalSpec {
  EvalMode mode = EvalMode::Exact;
  long shots = 10000;  ///< per correlator, sampled mode only

  static EvalSpec exact() { return {EvalMode::Exact, 0}; }
  static EvalSpec sampled(long shots) { return {EvalMode::Sampled, shots}; }
};

/**
 * Particle-swarm settings. Positions and bounds live in the normalized
 * parameter box [0,1]^6; the velocity clamp is expressed in box lengths
 * per dimension. An "iteration" is one evaluation round including the
 * initial one, so the evaluation budget is n_particles * n_iterations.
 */
struct SwarmConfig {
  int n_particles = 20;
  int n_iterations = 12;
  double inertia = 0.5;
  double cognitive = 0.5;
  double social = 0.5;
  double velocity_clamp = 0.5;
  std::array<std::pair<double, double>, 6> bounds{
      std::pair{0.0, 1.0}, std::pair{0.0, 1.0}, std::pair{0.0, 1.0},
      std::pair{0.0, 1.0}, std::pair{0.0, 1.0}, std::pair{0.0, 1.0}};
  std::uint64_t seed = 0;

  /** Throws ConfigError on out-of-contract settings. */
  void validate() const;
};

/** Warm-start region: particles initialize uniformly in a +-halfwidth box
 *  around center (normalized units), clamped to the bounds. */
struct InitBox {
  std::array<double, 6> center{};
  double halfwidth = 0.05;
};

/** Per-iteration swarm statistics, in evaluation order. */
struct IterationStats {
  double median_energy = 0.0;
  double energy_std = 0.0;  ///< population standard deviation
  std::vector<std::array<double, 6>> positions;  ///< normalized, per particle
};

/** Outcome of one swarm minimization over a generic objective. */
struct SwarmResult {
  std::array<double, 6> best_position{};  ///< normalized
  double best_value = 0.0;                ///< min over every evaluation
  std::vector<IterationStats> trajectory;  ///< length n_iterations
  std::vector<std::array<double, 6>> final_positions;  ///< last evaluated
  long n_evaluations = 0;
};

/**
 * Objective over normalized coordinates. The iteration and particle
 * indices identify the evaluation so that sampled objectives can derive
 * a dedicated RNG stream (serial and parallel schedules then agree).
 */
using Objective =
    std::function<double(const std::array<double, 6>& u, int iteration, int particle)>;

/**
 * Global-best particle swarm minimization:
 *   v <- inertia*v + cognitive*rp*(pbest-x) + social*rg*(gbest-x)
 *   x <- clamp(x + v)
 * with rp, rg uniform per-dimension draws, velocities clamped to
 * +-velocity_clamp box lengths and started at zero. Deterministic given
 * the seed; global-best value never increases between iterations.
 */
SwarmResult pso_minimize(const Objective& objective, const SwarmConfig& config,
                         const std::optional<InitBox>& init = std::nullopt);

/**
 * One energy evaluation: prepare the circuit state under the noise model
 * and measure the Hamiltonian. Exact mode takes the exact expectation;
 * sampled mode sums per-term correlator estimates (identity term exact)
 * using the provided stream, which must be non-null.
 */
double energy(const AnsatzParams& params, const QubitOperator& hamiltonian,
              const NoiseModel& noise, const EvalSpec& eval,
              RngStream* rng = nullptr, double coherent_offset = 0.0);

/** Swarm minimization of `energy`, plus the per-particle end states. */
struct VqeResult {
  AnsatzParams best_params;
  double best_energy = 0.0;
  std::vector<IterationStats> trajectory;
  std::vector<DensityMatrix> final_states;
  long n_evaluations = 0;
};

VqeResult solve_vqe(const QubitOperator& hamiltonian, const NoiseModel& noise,
                    const EvalSpec& eval, const SwarmConfig& config,
                    double coherent_offset = 0.0,
                    const std::optional<InitBox>& init = std::nullopt);

/** Sweep knobs: iteration budget and box half-width after the first row. */
struct SweepOptions {
  int warm_iterations = 6;
  double warm_halfwidth = 0.05;
};

/** One row of a dissociation sweep. */
struct SweepEntry {
  double R = 0.0;
  VqeResult result;
  double exact_ground = 0.0;
  int iterations_used = 0;
};

/**
 * VQE across every table row in order. The first row starts from a
 * full-box random swarm with the configured budget; each later row
 * re-initializes the swarm in a +-warm_halfwidth box around the previous
 * row's best position and runs the reduced warm budget. Per-row RNG
 * streams derive from (seed, row index), so results do not depend on
 * evaluation order.
 */
std::vector<SweepEntry> dissociation_sweep(const MoleculeTable& table,
                                           const SwarmConfig& config,
                                           const NoiseModel& noise,
                                           const EvalSpec& eval,
                                           const SweepOptions& options = {},
                                           double coherent_offset = 0.0);

}  // namespace molspec
