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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "molspec/config.hpp"
#include "molspec/errors.hpp"
#include "molspec/io.hpp"

using namespace molspec;
namespace fs = std::filesystem;

namespace {

/** Fresh scratch directory under the system temp root. */
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "molspec_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int quiet_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly; usage faults exit with code 2") {
  CHECK(quiet_cli({"--help"}) == 0);
  CHECK(quiet_cli({"exact", "--help"}) == 0);
  CHECK(quiet_cli({}) == 2);                    // a subcommand is required
  CHECK(quiet_cli({"transmogrify"}) == 2);      // unknown subcommand
  CHECK(quiet_cli({"vqe", "--bogus", "1"}) == 2);
}

TEST_CASE("runs without a pinned seed are refused") {
  const fs::path dir = scratch("no_seed");
  CHECK(quiet_cli({"exact", "--out", dir.string()}) == 2);
  CHECK(quiet_cli({"vqe", "--r", "1.55", "--out", dir.string()}) == 2);
  CHECK(quiet_cli({"sweep", "--out", dir.string()}) == 2);
  CHECK(quiet_cli({"qse", "--out", dir.string()}) == 2);
}

TEST_CASE("configuration faults map to exit code 2") {
  const fs::path dir = scratch("cfg_faults");
  // Unknown operator set label.
  CHECK(quiet_cli({"qse", "--seed", "1", "--ops", "octopus",
                   "--out", dir.string()}) == 2);
  // Missing table file.
  CHECK(quiet_cli({"exact", "--seed", "1", "--table", "/no/such/table.csv",
                   "--out", dir.string()}) == 2);
  // Distance that is not a table row.
  CHECK(quiet_cli({"vqe", "--seed", "1", "--r", "0.60",
                   "--out", dir.string()}) == 2);
  // vqe needs exactly one distance.
  CHECK(quiet_cli({"vqe", "--seed", "1", "--r", "0.75,0.85",
                   "--out", dir.string()}) == 2);
  // hist without an input file.
  CHECK(quiet_cli({"hist", "--out", dir.string()}) == 2);

  // Unknown keys in a config file are refused, not ignored.
  const fs::path cfg = dir / "bad.cfg";
  std::ofstream(cfg) << "sede = 7\n";
  CHECK(quiet_cli({"exact", "--seed", "1", "--config", cfg.string(),
                   "--out", dir.string()}) == 2);
}

TEST_CASE("exact writes a stamped spectrum table") {
  const fs::path dir = scratch("exact_run");
  REQUIRE(quiet_cli({"exact", "--seed", "1", "--r", "0.75,1.55",
                     "--out", dir.string()}) == 0);
  const std::string csv = slurp(dir / "spectrum.csv");
  CHECK(csv.rfind("# molspec ", 0) == 0);
  CHECK(csv.find("config=") != std::string::npos);
  CHECK(csv.find("R,e0,e1,e2,e3") != std::string::npos);
  CHECK(csv.find("\n0.75,") != std::string::npos);
  CHECK(csv.find("\n1.55,") != std::string::npos);
  CHECK(csv.find("-1.13711727") != std::string::npos);
}

TEST_CASE("flags override config file entries key by key") {
  const fs::path dir = scratch("precedence");
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# comment line\n"
                     << "seed = 1\n"
                     << "r = 3.95\n";
  // --r overrides the file's distance; the file's seed still applies.
  REQUIRE(quiet_cli({"exact", "--config", cfg.string(), "--r", "0.75",
                     "--out", dir.string()}) == 0);
  const std::string csv = slurp(dir / "spectrum.csv");
  CHECK(csv.find("\n0.75,") != std::string::npos);
  CHECK(csv.find("\n3.95,") == std::string::npos);
}

TEST_CASE("vqe emits a result document and a trajectory table") {
  const fs::path dir = scratch("vqe_run");
  REQUIRE(quiet_cli({"vqe", "--seed", "3", "--r", "1.55",
                     "--out", dir.string()}) == 0);
  const Json j = Json::parse(slurp(dir / "vqe.json"));
  CHECK(j.at("R").get<double>() == doctest::Approx(1.55));
  CHECK(j.at("n_evaluations").get<long>() == 240);
  CHECK(j.at("within_chemical_accuracy").get<bool>());
  CHECK(j.at("trajectory").size() == 12);
  CHECK(j.at("final_positions").size() == 20);
  CHECK(j.contains("version"));
  CHECK(j.contains("config_digest"));

  const std::string traj = slurp(dir / "trajectory.csv");
  CHECK(traj.find("iteration,median_energy,energy_std") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
  const fs::path a = scratch("repeat_a");
  const fs::path b = scratch("repeat_b");
  const std::vector<std::string> base = {"vqe", "--seed", "3", "--r", "1.55"};
  std::vector<std::string> run_a = base;
  run_a.insert(run_a.end(), {"--out", a.string()});
  std::vector<std::string> run_b = base;
  run_b.insert(run_b.end(), {"--out", b.string()});
  REQUIRE(quiet_cli(run_a) == 0);
  REQUIRE(quiet_cli(run_b) == 0);
  CHECK(slurp(a / "vqe.json") == slurp(b / "vqe.json"));
  CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
}

TEST_CASE("a short sweep feeds its end states into the expansion stage") {
  const fs::path dir = scratch("sweep_to_qse");
  const fs::path cfg = dir / "small.cfg";
  std::ofstream(cfg) << "particles = 6\niterations = 4\nwarm_iterations = 2\n";
  REQUIRE(quiet_cli({"sweep", "--seed", "12", "--r", "0.75,0.85",
                     "--config", cfg.string(), "--out", dir.string()}) == 0);
  CHECK(fs::exists(dir / "sweep.csv"));
  CHECK(fs::exists(dir / "error_report.csv"));
  const Json sweep = Json::parse(slurp(dir / "sweep.json"));
  REQUIRE(sweep.at("entries").size() == 2);
  CHECK(sweep.at("entries")[0].at("final_positions").size() == 6);

  const fs::path qdir = dir / "qse";
  REQUIRE(quiet_cli({"qse", "--seed", "12",
                     "--states", (dir / "sweep.json").string(),
                     "--ops", "linear_response", "--out", qdir.string()}) == 0);
  const std::string csv = slurp(qdir / "qse_energies.csv");
  CHECK(csv.find("R,set,particle,level,energy") != std::string::npos);
  CHECK(csv.find("0.75,linear_response,0,0,") != std::string::npos);
  CHECK(csv.find("0.85,linear_response,5,") != std::string::npos);
}

TEST_CASE("qse compares mitigated estimates against the bare expectation") {
  const fs::path dir = scratch("qse_noise");
  const fs::path cfg = dir / "noise.cfg";
  std::ofstream(cfg) << "noise = pauli_x:0.1\n";
  REQUIRE(quiet_cli({"qse", "--seed", "1", "--r", "0.75",
                     "--ops", "linear_response,full_p2",
                     "--config", cfg.string(), "--out", dir.string()}) == 0);
  const Json j = Json::parse(slurp(dir / "qse.json"));
  const Json& entry = j.at("entries")[0];
  const double exact0 = entry.at("exact")[0].get<double>();
  const double unmit = entry.at("unmitigated").get<double>();
  const double mitigated =
      entry.at("sets")[0].at("ground_estimate").get<double>();
  CHECK(std::abs(mitigated - exact0) * 10.0 <= std::abs(unmit - exact0));

  const std::string compare = slurp(dir / "qse_compare.csv");
  CHECK(compare.find("R,unmitigated,linear_response,full_p2") !=
        std::string::npos);
}

TEST_CASE("the demonstration report lists every operator set stage") {
  std::ostringstream out, err;
  REQUIRE(run_cli({"spurious-demo"}, out, err) == 0);
  const std::string text = out.str();
  CHECK(text.find("[si_nine] rank 7") != std::string::npos);
  CHECK(text.find("[si_six] rank 6") != std::string::npos);
  CHECK(text.find("spurious (3)") != std::string::npos);
  CHECK(text.find("spurious (0)") != std::string::npos);
  CHECK(text.find("[full_p2] rank 8") != std::string::npos);
  CHECK(text.find("maximally mixed") != std::string::npos);
  CHECK(err.str().empty());
}

TEST_CASE("hist finds the clusters in a generated energy file") {
  const fs::path dir = scratch("hist_run");
  const fs::path data = dir / "energies.csv";
  {
    std::ofstream f(data);
    f << "# two clusters\nenergy\n";
    for (int i = 0; i < 200; ++i) {
      f << (-1.0 + 1e-4 * (i % 7)) << "\n";
      f << (-0.5 + 1e-4 * (i % 5)) << "\n";
    }
  }
  REQUIRE(quiet_cli({"hist", "--in", data.string(), "--out", dir.string()}) == 0);
  const std::string peaks = slurp(dir / "peaks.csv");
  CHECK(peaks.find("energy,height") != std::string::npos);
  // Exactly two data lines after the two header lines.
  CHECK(std::count(peaks.begin(), peaks.end(), '\n') == 4);

  CHECK(quiet_cli({"hist", "--in", (dir / "missing.csv").string(),
                   "--out", dir.string()}) == 2);
}

}  // TEST_SUITE
