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

#include "molspec/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "molspec/errors.hpp"

namespace molspec {

namespace {

// Stream tags keep the RNG draws of unrelated purposes independent.
constexpr std::uint64_t kTagInit = 0x696E6974;    // particle initialization
constexpr std::uint64_t kTagUpdate = 0x75706474;  // velocity update draws
constexpr std::uint64_t kTagEval = 0x6576616C;    // sampled-objective shots
constexpr std::uint64_t kTagRow = 0x726F77;       // per-sweep-row seeds

AnsatzParams params_of(const std::array<double, 6>& u) {
  return AnsatzParams::from_normalized(u);
}

double population_std(const std::vector<double>& values, double mean) {
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return (n % 2 == 1) ? values[n / 2]
                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

void SwarmConfig::validate() const {
  if (n_particles < 2) throw ConfigError("swarm needs at least 2 particles");
  if (n_iterations < 1) throw ConfigError("swarm needs at least 1 iteration");
  if (inertia < 0.0 || cognitive < 0.0 || social < 0.0)
    throw ConfigError("swarm weights must be non-negative");
  if (velocity_clamp <= 0.0)
    throw ConfigError("velocity clamp must be positive");
  for (const auto& [lo, hi] : bounds)
    if (!(0.0 <= lo && lo < hi && hi <= 1.0))
      throw ConfigError("swarm bounds must satisfy 0 <= lo < hi <= 1");
}

SwarmResult pso_minimize(const Objective& objective, const SwarmConfig& config,
                         const std::optional<InitBox>& init) {
  config.validate();
  const int np = config.n_particles;
  constexpr int dim = 6;

  std::vector<std::array<double, 6>> x(np), vel(np), pbest(np);
  std::vector<double> pbest_value(np);

  for (int j = 0; j < np; ++j) {
    RngStream rng = RngStream::derive(config.seed, kTagInit, j);
    for (int d = 0; d < dim; ++d) {
      const auto [lo, hi] = config.bounds[d];
      double u;
      if (init) {
        u = init->center[d] + init->halfwidth * (2.0 * rng.uniform() - 1.0);
      } else {
        u = rng.uniform(lo, hi);
      }
      x[j][d] = std::clamp(u, lo, hi);
      vel[j][d] = 0.0;
    }
  }

  SwarmResult result;
  result.best_value = std::numeric_limits<double>::infinity();
  std::array<double, 6> gbest{};

  auto evaluate_round = [&](int iteration) {
    std::vector<double> energies(np);
    for (int j = 0; j < np; ++j)
      energies[j] = objective(x[j], iteration, j);
    result.n_evaluations += np;

    for (int j = 0; j < np; ++j) {
      if (iteration == 0 || energies[j] < pbest_value[j]) {
        pbest[j] = x[j];
        pbest_value[j] = energies[j];
      }
      if (energies[j] < result.best_value) {
        result.best_value = energies[j];
        gbest = x[j];
      }
    }

    IterationStats stats;
    const double mean =
        std::accumulate(energies.begin(), energies.end(), 0.0) /
        static_cast<double>(np);
    stats.median_energy = median_of(energies);
    stats.energy_std = population_std(energies, mean);
    stats.positions = x;
    result.trajectory.push_back(std::move(stats));
  };

  evaluate_round(0);
  for (int iteration = 1; iteration < config.n_iterations; ++iteration) {
    for (int j = 0; j < np; ++j) {
      RngStream rng = RngStream::derive(config.seed, kTagUpdate, iteration, j);
      for (int d = 0; d < dim; ++d) {
        const auto [lo, hi] = config.bounds[d];
        const double rp = rng.uniform();
        const double rg = rng.uniform();
        double v = config.inertia * vel[j][d] +
                   config.cognitive * rp * (pbest[j][d] - x[j][d]) +
                   config.social * rg * (gbest[d] - x[j][d]);
        const double vmax = config.velocity_clamp * (hi - lo);
        v = std::clamp(v, -vmax, vmax);
        vel[j][d] = v;
        x[j][d] = std::clamp(x[j][d] + v, lo, hi);
      }
    }
    evaluate_round(iteration);
  }

  result.best_position = gbest;
  result.final_positions = x;
  return result;
}

double energy(const AnsatzParams& params, const QubitOperator& hamiltonian,
              const NoiseModel& noise, const EvalSpec& eval, RngStream* rng,
              double coherent_offset) {
  const DensityMatrix rho = prepare_state(params, noise, coherent_offset);
  if (eval.mode == EvalMode::Exact) return expectation(rho, hamiltonian);

  if (rng == nullptr)
    throw std::invalid_argument("sampled energy evaluation requires an RNG stream");
  if (!hamiltonian.is_hermitian(1e-12))
    throw std::invalid_argument("energy requires a Hermitian Hamiltonian");
  double total = 0.0;
  for (const auto& [string, coeff] : hamiltonian.terms()) {
    if (string.is_identity()) {
      total += coeff.real();
    } else {
      total += coeff.real() * sample_correlator(rho, string, eval.shots, *rng);
    }
  }
  return total;
}

VqeResult solve_vqe(const QubitOperator& hamiltonian, const NoiseModel& noise,
                    const EvalSpec& eval, const SwarmConfig& config,
                    double coherent_offset, const std::optional<InitBox>& init) {
  const Objective objective = [&](const std::array<double, 6>& u, int iteration,
                                  int particle) {
    if (eval.mode == EvalMode::Exact)
      return energy(params_of(u), hamiltonian, noise, eval, nullptr,
                    coherent_offset);
    RngStream rng = RngStream::derive(config.seed, kTagEval, iteration, particle);
    return energy(params_of(u), hamiltonian, noise, eval, &rng, coherent_offset);
  };

  SwarmResult swarm = pso_minimize(objective, config, init);
  VqeResult out;
  out.best_params = params_of(swarm.best_position);
  out.best_energy = swarm.best_value;
  out.trajectory = std::move(swarm.trajectory);
  out.n_evaluations = swarm.n_evaluations;
  out.final_states.reserve(swarm.final_positions.size());
  for (const auto& u : swarm.final_positions)
    out.final_states.push_back(prepare_state(params_of(u), noise, coherent_offset));
  return out;
}

std::vector<SweepEntry> dissociation_sweep(const MoleculeTable& table,
                                           const SwarmConfig& config,
                                           const NoiseModel& noise,
                                           const EvalSpec& eval,
                                           const SweepOptions& options,
                                           double coherent_offset) {
  if (table.size() == 0) throw ConfigError("dissociation sweep needs a non-empty table");
  if (options.warm_iterations < 1)
    throw ConfigError("warm-start iteration budget must be >= 1");
  if (!(options.warm_halfwidth > 0.0 && options.warm_halfwidth <= 1.0))
    throw ConfigError("warm-start half-width must lie in (0, 1]");

  std::vector<SweepEntry> entries;
  entries.reserve(table.size());
  std::optional<InitBox> init;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const CoefficientRow& row = table.rows()[idx];
    SwarmConfig row_config = config;
    row_config.seed = derive_seed(config.seed, kTagRow, idx);
    if (init) row_config.n_iterations = options.warm_iterations;

    SweepEntry entry;
    entry.R = row.R;
    entry.iterations_used = row_config.n_iterations;
    entry.result = solve_vqe(hamiltonian_from_row(row), noise, eval, row_config,
                             coherent_offset, init);
    entry.exact_ground = analytic_spectrum(row)[0];
    init = InitBox{entry.result.best_params.to_normalized(),
                   options.warm_halfwidth};
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace molspec
