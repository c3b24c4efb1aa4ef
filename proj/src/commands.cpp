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

#include "molspec/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "molspec/analysis.hpp"
#include "molspec/errors.hpp"
#include "molspec/io.hpp"
#include "molspec/qse.hpp"

namespace molspec {

namespace {

/// Stream tag for correlator sampling inside the qse command ("qse").
constexpr std::uint64_t kTagQse = 0x717365ULL;

std::string out_path(const RunConfig& config, const char* name) {
  return (std::filesystem::path(config.out_dir) / name).string();
}

Json positions_to_json(const std::vector<std::array<double, 6>>& positions) {
  Json arr = Json::array();
  for (const auto& p : positions)
    arr.push_back(std::vector<double>(p.begin(), p.end()));
  return arr;
}

Json trajectory_to_json(const std::vector<IterationStats>& trajectory) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    Json row;
    row["iteration"] = i;
    row["median_energy"] = trajectory[i].median_energy;
    row["energy_std"] = trajectory[i].energy_std;
    arr.push_back(row);
  }
  return arr;
}

std::string trajectory_to_csv(const std::string& header,
                              const std::vector<IterationStats>& trajectory) {
  std::string text = header + "iteration,median_energy,energy_std\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    text += std::to_string(i);
    text += ',';
    text += format_double(trajectory[i].median_energy);
    text += ',';
    text += format_double(trajectory[i].energy_std);
    text += '\n';
  }
  return text;
}

/** Exact ground state of the Hamiltonian as a density matrix. */
DensityMatrix exact_ground_state(const QubitOperator& hamiltonian) {
  const EigenDecomposition ed = eigh(to_matrix(hamiltonian));
  const std::size_t d = ed.eigenvectors.rows();
  std::vector<Complex> amplitudes(d);
  for (std::size_t r = 0; r < d; ++r) amplitudes[r] = ed.eigenvectors(r, 0);
  return DensityMatrix::pure(amplitudes);
}

/** Run every configured channel over the state, in listed order. Circuit
 *  locations do not apply here — there is no circuit. */
DensityMatrix apply_all_channels(DensityMatrix rho, const NoiseModel& noise) {
  for (const auto& [loc, ch] : noise.channels) rho = apply_channel(rho, ch);
  return rho;
}

Json spurious_report_to_json(const SpuriousReport& report) {
  Json j;
  j["match_tolerance"] = report.tolerance;
  Json matched = Json::array();
  for (const MatchedLevel& m : report.matched) {
    Json level;
    level["exact"] = m.exact_value;
    level["qse"] = m.qse_value;
    level["multiplicity"] = m.multiplicity;
    matched.push_back(level);
  }
  j["matched"] = matched;
  j["spurious"] = report.spurious;
  return j;
}

}  // namespace

void cmd_exact(const RunConfig& config) {
  require_seed(config, "exact");
  const MoleculeTable table = load_table(config);
  const std::vector<double> rs = resolve_r_values(config, table);
  const std::string digest = config_digest(config);

  std::string csv = output_header(digest) + "R,e0,e1,e2,e3\n";
  for (double R : rs) {
    const std::array<double, 4> levels = exact_spectrum(table.row_at(R));
    csv += format_double(R);
    for (double e : levels) {
      csv += ',';
      csv += format_double(e);
    }
    csv += '\n';
  }
  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "spectrum.csv"), csv);
}

void cmd_vqe(const RunConfig& config) {
  require_seed(config, "vqe");
  const MoleculeTable table = load_table(config);
  const std::vector<double> rs = resolve_r_values(config, table);
  if (rs.size() != 1)
    throw ConfigError(
        "vqe runs at a single distance; select one with r=<value>");
  const double R = rs.front();
  const CoefficientRow& row = table.row_at(R);
  const QubitOperator h = hamiltonian_from_row(row);

  const VqeResult result = solve_vqe(h, config.noise, config.eval,
                                     config.swarm, config.coherent_offset);
  const double exact_ground = analytic_spectrum(row)[0];
  const double abs_error = std::abs(result.best_energy - exact_ground);
  const std::string digest = config_digest(config);

  Json j = tagged_json(digest);
  j["R"] = R;
  j["best_energy"] = result.best_energy;
  j["exact_ground"] = exact_ground;
  j["abs_error"] = abs_error;
  j["within_chemical_accuracy"] = abs_error <= chemical_accuracy();
  j["n_evaluations"] = result.n_evaluations;
  j["n_iterations"] = result.trajectory.size();
  j["best_theta"] = std::vector<double>(result.best_params.theta.begin(),
                                        result.best_params.theta.end());
  const std::array<double, 6> best_u = result.best_params.to_normalized();
  j["best_position"] = std::vector<double>(best_u.begin(), best_u.end());
  j["trajectory"] = trajectory_to_json(result.trajectory);
  j["final_positions"] = result.trajectory.empty()
                             ? Json::array()
                             : positions_to_json(result.trajectory.back().positions);

  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "vqe.json"), dump_json(j));
  write_text_file(out_path(config, "trajectory.csv"),
                  trajectory_to_csv(output_header(digest), result.trajectory));
}

void cmd_sweep(const RunConfig& config) {
  require_seed(config, "sweep");
  MoleculeTable table = load_table(config);
  if (!config.r_values.empty()) table = table.subset(config.r_values);

  const std::vector<SweepEntry> entries =
      dissociation_sweep(table, config.swarm, config.noise, config.eval,
                         config.sweep, config.coherent_offset);
  const std::string digest = config_digest(config);

  std::string csv = output_header(digest) +
                    "R,best_energy,exact_energy,abs_error,iterations,evaluations\n";
  std::map<std::pair<double, int>, double> estimates;
  Json jentries = Json::array();
  for (const SweepEntry& entry : entries) {
    const double abs_error = std::abs(entry.result.best_energy - entry.exact_ground);
    csv += format_double(entry.R);
    csv += ',';
    csv += format_double(entry.result.best_energy);
    csv += ',';
    csv += format_double(entry.exact_ground);
    csv += ',';
    csv += format_double(abs_error);
    csv += ',';
    csv += std::to_string(entry.iterations_used);
    csv += ',';
    csv += std::to_string(entry.result.n_evaluations);
    csv += '\n';
    estimates[{entry.R, 0}] = entry.result.best_energy;

    Json je;
    je["R"] = entry.R;
    je["best_energy"] = entry.result.best_energy;
    je["exact_ground"] = entry.exact_ground;
    je["abs_error"] = abs_error;
    je["iterations"] = entry.iterations_used;
    je["evaluations"] = entry.result.n_evaluations;
    je["best_theta"] = std::vector<double>(entry.result.best_params.theta.begin(),
                                           entry.result.best_params.theta.end());
    const std::array<double, 6> u = entry.result.best_params.to_normalized();
    je["best_position"] = std::vector<double>(u.begin(), u.end());
    je["final_positions"] =
        entry.result.trajectory.empty()
            ? Json::array()
            : positions_to_json(entry.result.trajectory.back().positions);
    je["trajectory"] = trajectory_to_json(entry.result.trajectory);
    jentries.push_back(je);
  }

  const ErrorTable errors = error_report(estimates, table);
  std::string err_csv =
      output_header(digest) +
      "R,level,estimated,exact,abs_error,within_chemical_accuracy\n";
  for (const ErrorRow& er : errors.rows) {
    err_csv += format_double(er.R);
    err_csv += ",";
    err_csv += std::to_string(er.level);
    err_csv += ',';
    err_csv += format_double(er.estimated);
    err_csv += ',';
    err_csv += format_double(er.exact);
    err_csv += ',';
    err_csv += format_double(er.abs_error);
    err_csv += ',';
    err_csv += er.within_chemical_accuracy ? "1" : "0";
    err_csv += '\n';
  }

  Json j = tagged_json(digest);
  j["noise"] = config.noise_text;
  j["coherent_offset"] = config.coherent_offset;
  j["entries"] = jentries;

  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "sweep.csv"), csv);
  write_text_file(out_path(config, "error_report.csv"), err_csv);
  write_text_file(out_path(config, "sweep.json"), dump_json(j));
}

namespace {

/** qse without --states: expand the (noise-corrupted) exact ground state. */
void qse_from_exact_states(const RunConfig& config) {
  const MoleculeTable table = load_table(config);
  const std::vector<double> rs = resolve_r_values(config, table);
  const std::string digest = config_digest(config);

  std::vector<OperatorSet> sets;
  for (const std::string& label : config.op_labels)
    sets.push_back(named_set(label));

  const double match_tol =
      config.eval.mode == EvalMode::Exact
          ? 1e-6
          : 10.0 / std::sqrt(static_cast<double>(config.eval.shots));

  std::string compare_csv = output_header(digest) + "R,unmitigated";
  for (const OperatorSet& set : sets) compare_csv += "," + set.label;
  compare_csv += '\n';

  Json jentries = Json::array();
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    const CoefficientRow& row = table.row_at(rs[ri]);
    const QubitOperator h = hamiltonian_from_row(row);
    const DensityMatrix rho =
        apply_all_channels(exact_ground_state(h), config.noise);
    const std::array<double, 4> exact = exact_spectrum(row);
    const double unmitigated = expectation(rho, h);

    Json je;
    je["R"] = row.R;
    je["unmitigated"] = unmitigated;
    je["exact"] = std::vector<double>(exact.begin(), exact.end());
    Json jsets = Json::array();

    compare_csv += format_double(row.R);
    compare_csv += ',';
    compare_csv += format_double(unmitigated);
    for (std::size_t si = 0; si < sets.size(); ++si) {
      QseProblem problem{rho, h, sets[si], config.eval, config.cutoff};
      QseSolution solution;
      if (config.eval.mode == EvalMode::Sampled) {
        RngStream rng =
            RngStream::derive(config.swarm.seed, kTagQse, ri, si);
        solution = solve(problem, &rng);
      } else {
        solution = solve(problem);
      }
      if (solution.eigenvalues.empty())
        throw NumericalError("subspace collapsed to rank zero");
      const SpuriousReport report = classify_spurious(
          solution, {exact.begin(), exact.end()}, match_tol);

      Json js;
      js["label"] = sets[si].label;
      js["op_labels"] = solution.op_labels;
      js["rank"] = solution.rank;
      js["s_spectrum"] = solution.s_spectrum;
      js["eigenvalues"] = solution.eigenvalues;
      js["ground_estimate"] = solution.eigenvalues.front();
      js["report"] = spurious_report_to_json(report);
      jsets.push_back(js);

      compare_csv += ',';
      compare_csv += format_double(solution.eigenvalues.front());
    }
    compare_csv += '\n';
    je["sets"] = jsets;
    jentries.push_back(je);
  }

  Json j = tagged_json(digest);
  j["entries"] = jentries;

  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "qse.json"), dump_json(j));
  write_text_file(out_path(config, "qse_compare.csv"), compare_csv);
}

/** qse --states: expand every swarm end state stored in a sweep.json. */
void qse_from_sweep_states(const RunConfig& config) {
  const MoleculeTable table = load_table(config);
  const std::string digest = config_digest(config);

  std::ifstream in(config.states_path);
  if (!in)
    throw ConfigError("cannot open states file '" + config.states_path + "'");
  Json states;
  try {
    states = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(config.states_path + ": " + e.what());
  }
  if (!states.contains("entries"))
    throw ConfigError(config.states_path + ": missing 'entries' field");
  const NoiseModel state_noise =
      NoiseModel::parse(states.value("noise", std::string("none")));
  const double state_offset = states.value("coherent_offset", 0.0);

  std::vector<OperatorSet> sets;
  for (const std::string& label : config.op_labels)
    sets.push_back(named_set(label));

  std::string csv = output_header(digest) + "R,set,particle,level,energy\n";
  std::size_t entry_index = 0;
  for (const Json& entry : states.at("entries")) {
    const double R = entry.at("R").get<double>();
    const QubitOperator h = hamiltonian_at(table, R);
    const auto positions =
        entry.at("final_positions").get<std::vector<std::vector<double>>>();
    for (std::size_t pi = 0; pi < positions.size(); ++pi) {
      if (positions[pi].size() != 6)
        throw ConfigError(config.states_path +
                          ": final_positions entries must have 6 coordinates");
      std::array<double, 6> u{};
      std::copy(positions[pi].begin(), positions[pi].end(), u.begin());
      const DensityMatrix rho =
          prepare_state(AnsatzParams::from_normalized(u), state_noise,
                        state_offset);
      for (std::size_t si = 0; si < sets.size(); ++si) {
        QseProblem problem{rho, h, sets[si], config.eval, config.cutoff};
        QseSolution solution;
        if (config.eval.mode == EvalMode::Sampled) {
          RngStream rng = RngStream::derive(
              derive_seed(config.swarm.seed, kTagQse, entry_index, pi),
              kTagQse, si, 1);
          solution = solve(problem, &rng);
        } else {
          solution = solve(problem);
        }
        for (std::size_t li = 0; li < solution.eigenvalues.size(); ++li) {
          csv += format_double(R);
          csv += ',';
          csv += sets[si].label;
          csv += ',';
          csv += std::to_string(pi);
          csv += ',';
          csv += std::to_string(li);
          csv += ',';
          csv += format_double(solution.eigenvalues[li]);
          csv += '\n';
        }
      }
    }
    ++entry_index;
  }

  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "qse_energies.csv"), csv);
}

}  // namespace

void cmd_qse(const RunConfig& config) {
  require_seed(config, "qse");
  if (config.states_path.empty()) {
    qse_from_exact_states(config);
  } else {
    qse_from_sweep_states(config);
  }
}

void cmd_spurious_demo(std::ostream& out) {
  const SpuriousDemoSetup setup = spurious_demo_setup();

  out << "Spurious-state demonstration\n";
  out << "  Hamiltonian: H = ZI + IZ + XX\n";
  out << "  exact spectrum:";
  for (double e : setup.exact_eigenvalues) out << ' ' << format_double(e);
  out << "\n";
  out << "  reference state: equal mixture of the exact ground state and its\n"
         "  phase-carrying qubit-1 bit-flip image (purity "
      << format_double(setup.corrupted.purity()) << ")\n\n";

  const char* labels[] = {"si_nine", "si_six", "zz_pair", "full_p2"};
  for (const char* label : labels) {
    QseProblem problem{setup.corrupted, setup.hamiltonian, named_set(label)};
    const QseSolution solution = solve(problem);
    const SpuriousReport report =
        classify_spurious(solution, setup.exact_eigenvalues);

    out << "[" << label << "] rank " << solution.rank << "\n";
    out << "  eigenvalues:";
    for (double e : solution.eigenvalues) out << ' ' << format_double(e);
    out << "\n  matched levels:";
    for (const MatchedLevel& m : report.matched)
      out << ' ' << format_double(m.exact_value) << " (x" << m.multiplicity
          << ")";
    out << "\n  spurious (" << report.spurious.size() << "):";
    for (double e : report.spurious) out << ' ' << format_double(e);
    out << "\n\n";
  }

  QseProblem mixed{DensityMatrix::maximally_mixed(2), setup.hamiltonian,
                   named_set("full_p2")};
  const QseSolution solution = solve(mixed);
  const SpuriousReport report =
      classify_spurious(solution, setup.exact_eigenvalues);
  out << "[full_p2 on the maximally mixed state] rank " << solution.rank
      << "\n  matched levels:";
  for (const MatchedLevel& m : report.matched)
    out << ' ' << format_double(m.exact_value) << " (x" << m.multiplicity
        << ")";
  out << "\n  spurious (" << report.spurious.size() << ")\n";
}

void cmd_hist(const RunConfig& config) {
  if (config.in_path.empty())
    throw ConfigError("hist requires --in <energies.csv>");
  const std::vector<double> energies = read_energy_column(config.in_path);
  const EnergyHistogram hist =
      histogram_energies(energies, config.bin_width, config.smooth_sigma);
  const std::vector<Peak> peaks = find_peaks(hist, config.prominence);
  const std::string digest = config_digest(config);

  std::string hist_csv = output_header(digest) + "bin_center,count,smoothed\n";
  for (std::size_t i = 0; i < hist.bin_centers.size(); ++i) {
    hist_csv += format_double(hist.bin_centers[i]);
    hist_csv += ',';
    hist_csv += format_double(hist.counts[i]);
    hist_csv += ',';
    hist_csv += format_double(hist.smoothed[i]);
    hist_csv += '\n';
  }
  std::string peaks_csv = output_header(digest) + "energy,height\n";
  for (const Peak& p : peaks) {
    peaks_csv += format_double(p.energy);
    peaks_csv += ',';
    peaks_csv += format_double(p.height);
    peaks_csv += '\n';
  }

  ensure_directory(config.out_dir);
  write_text_file(out_path(config, "hist.csv"), hist_csv);
  write_text_file(out_path(config, "peaks.csv"), peaks_csv);
}

namespace {

struct Flags {
  std::string config, seed, out, table, r, shots, ops, in, states;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_table = nullptr;
  CLI::Option* o_r = nullptr;
  CLI::Option* o_shots = nullptr;
  CLI::Option* o_ops = nullptr;
  CLI::Option* o_in = nullptr;
  CLI::Option* o_states = nullptr;
};

enum : unsigned {
  kWithShots = 1u << 0,
  kWithOps = 1u << 1,
  kWithStates = 1u << 2,
  kWithIn = 1u << 3,
  kWithData = 1u << 4,  // --table/--r/--seed
};

void add_flags(CLI::App* sub, Flags& f, unsigned mask) {
  f.o_config =
      sub->add_option("--config", f.config, "flat key=value config file");
  f.o_out = sub->add_option("--out", f.out, "output directory (default '.')");
  if (mask & kWithData) {
    f.o_seed = sub->add_option("--seed", f.seed, "base RNG seed (required)");
    f.o_table = sub->add_option("--table", f.table,
                                "'embedded' or a coefficient CSV path");
    f.o_r = sub->add_option(
        "--r", f.r, "'all' or comma-separated distances (must match table rows)");
  }
  if (mask & kWithShots)
    f.o_shots = sub->add_option("--shots", f.shots,
                                "'exact' or per-correlator shot count");
  if (mask & kWithOps)
    f.o_ops = sub->add_option("--ops", f.ops,
                              "comma-separated operator set labels");
  if (mask & kWithStates)
    f.o_states = sub->add_option("--states", f.states,
                                 "sweep.json with swarm end states to expand");
  if (mask & kWithIn)
    f.o_in = sub->add_option("--in", f.in, "input CSV with an energy column");
}

RunConfig build_config(const Flags& f) {
  RunConfig cfg;
  if (f.o_config && f.o_config->count()) apply_file(cfg, f.config);
  // Flags override file entries key by key.
  if (f.o_table && f.o_table->count()) apply_entry(cfg, "table", f.table);
  if (f.o_r && f.o_r->count()) apply_entry(cfg, "r", f.r);
  if (f.o_seed && f.o_seed->count()) apply_entry(cfg, "seed", f.seed);
  if (f.o_shots && f.o_shots->count()) apply_entry(cfg, "shots", f.shots);
  if (f.o_ops && f.o_ops->count()) apply_entry(cfg, "ops", f.ops);
  if (f.o_out && f.o_out->count()) apply_entry(cfg, "out", f.out);
  if (f.o_in && f.o_in->count()) apply_entry(cfg, "in", f.in);
  if (f.o_states && f.o_states->count()) apply_entry(cfg, "states", f.states);
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Two-qubit molecular spectra: swarm-optimized variational ground "
      "states, subspace-expansion excited states and error mitigation"};
  app.name("molspec");
  app.require_subcommand(1);

  CLI::App* sub_exact = app.add_subcommand(
      "exact", "write the exact four-level spectrum per distance");
  CLI::App* sub_vqe = app.add_subcommand(
      "vqe", "swarm-optimize the ground state at one distance");
  CLI::App* sub_sweep = app.add_subcommand(
      "sweep", "warm-started ground-state scan over the whole table");
  CLI::App* sub_qse = app.add_subcommand(
      "qse", "subspace-expansion spectra from exact or swarm states");
  CLI::App* sub_demo = app.add_subcommand(
      "spurious-demo", "fixed worked example of spurious states");
  CLI::App* sub_hist = app.add_subcommand(
      "hist", "histogram + peak finding over an energy list");

  Flags f_exact, f_vqe, f_sweep, f_qse, f_hist;
  add_flags(sub_exact, f_exact, kWithData);
  add_flags(sub_vqe, f_vqe, kWithData | kWithShots);
  add_flags(sub_sweep, f_sweep, kWithData | kWithShots);
  add_flags(sub_qse, f_qse, kWithData | kWithShots | kWithOps | kWithStates);
  add_flags(sub_hist, f_hist, kWithIn);

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("molspec");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<std::vector<char>> storage;
  storage.reserve(full.size());
  for (const std::string& s : full) {
    storage.emplace_back(s.begin(), s.end());
    storage.back().push_back('\0');
  }
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (std::vector<char>& buf : storage) argv.push_back(buf.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (sub_exact->parsed()) cmd_exact(build_config(f_exact));
    if (sub_vqe->parsed()) cmd_vqe(build_config(f_vqe));
    if (sub_sweep->parsed()) cmd_sweep(build_config(f_sweep));
    if (sub_qse->parsed()) cmd_qse(build_config(f_qse));
    if (sub_demo->parsed()) cmd_spurious_demo(out);
    if (sub_hist->parsed()) cmd_hist(build_config(f_hist));
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int run_cli(const std::vector<std::string>& args) {
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace molspec
