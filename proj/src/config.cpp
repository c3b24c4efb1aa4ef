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

#include "molspec/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "molspec/errors.hpp"

namespace molspec {

namespace {

std::string trim(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const std::size_t last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse number '" + value + "'");
  }
  if (consumed != value.size() || !std::isfinite(v))
    throw ConfigError(key + ": cannot parse number '" + value + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  long v = 0;
  try {
    v = std::stol(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse integer '" + value + "'");
  }
  if (consumed != value.size())
    throw ConfigError(key + ": cannot parse integer '" + value + "'");
  return v;
}

int parse_positive_int(const std::string& key, const std::string& value) {
  const long v = parse_long(key, value);
  if (v < 1 || v > 1000000)
    throw ConfigError(key + ": expected a positive integer, got '" + value + "'");
  return static_cast<int>(v);
}

std::uint64_t parse_seed(const std::string& value) {
  std::size_t consumed = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError("seed: cannot parse unsigned integer '" + value + "'");
  }
  if (consumed != value.size())
    throw ConfigError("seed: cannot parse unsigned integer '" + value + "'");
  return static_cast<std::uint64_t>(v);
}

/** Shortest-round-trip-free but deterministic double rendering. */
std::string render_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(',');
    out += items[i];
  }
  return out;
}

}  // namespace

void apply_entry(RunConfig& config, const std::string& key,
                 const std::string& value) {
  if (key == "table") {
    if (value.empty()) throw ConfigError("table: empty value");
    config.table_source = value;
  } else if (key == "r") {
    if (value == "all") {
      config.r_values.clear();
      return;
    }
    const std::vector<std::string> parts = split_commas(value);
    if (parts.empty()) throw ConfigError("r: expected 'all' or a comma list");
    config.r_values.clear();
    for (const std::string& p : parts)
      config.r_values.push_back(parse_double("r", p));
  } else if (key == "seed") {
    config.swarm.seed = parse_seed(value);
    config.seed_set = true;
  } else if (key == "shots") {
    if (value == "exact") {
      config.eval = EvalSpec::exact();
    } else {
      const long shots = parse_long("shots", value);
      if (shots < 1)
        throw ConfigError("shots: expected 'exact' or a positive integer");
      config.eval = EvalSpec::sampled(shots);
    }
  } else if (key == "ops") {
    const std::vector<std::string> labels = split_commas(value);
    if (labels.empty()) throw ConfigError("ops: expected operator set labels");
    for (const std::string& label : labels) named_set(label);  // validates
    config.op_labels = labels;
  } else if (key == "cutoff") {
    const double c = parse_double("cutoff", value);
    if (!(c > 0.0) || c >= 1.0)
      throw ConfigError("cutoff: expected a value in (0, 1)");
    config.cutoff = c;
  } else if (key == "out") {
    if (value.empty()) throw ConfigError("out: empty value");
    config.out_dir = value;
  } else if (key == "noise") {
    config.noise = NoiseModel::parse(value);  // validates
    config.noise_text = config.noise.empty() ? "none" : value;
  } else if (key == "coherent_offset") {
    config.coherent_offset = parse_double("coherent_offset", value);
  } else if (key == "particles") {
    config.swarm.n_particles = parse_positive_int("particles", value);
  } else if (key == "iterations") {
    config.swarm.n_iterations = parse_positive_int("iterations", value);
  } else if (key == "inertia") {
    config.swarm.inertia = parse_double("inertia", value);
  } else if (key == "cognitive") {
    config.swarm.cognitive = parse_double("cognitive", value);
  } else if (key == "social") {
    config.swarm.social = parse_double("social", value);
  } else if (key == "velocity_clamp") {
    const double v = parse_double("velocity_clamp", value);
    if (!(v > 0.0)) throw ConfigError("velocity_clamp: expected a positive value");
    config.swarm.velocity_clamp = v;
  } else if (key == "warm_iterations") {
    config.sweep.warm_iterations = parse_positive_int("warm_iterations", value);
  } else if (key == "warm_window") {
    const double w = parse_double("warm_window", value);
    if (!(w > 0.0) || w > 0.5)
      throw ConfigError("warm_window: expected a half-width in (0, 0.5]");
    config.sweep.warm_halfwidth = w;
  } else if (key == "bin_width") {
    const double w = parse_double("bin_width", value);
    if (!(w > 0.0)) throw ConfigError("bin_width: expected a positive value");
    config.bin_width = w;
  } else if (key == "smooth_sigma") {
    const double s = parse_double("smooth_sigma", value);
    if (!(s >= 0.0)) throw ConfigError("smooth_sigma: expected a non-negative value");
    config.smooth_sigma = s;
  } else if (key == "prominence") {
    const double p = parse_double("prominence", value);
    if (!(p >= 0.0) || p > 1.0)
      throw ConfigError("prominence: expected a fraction in [0, 1]");
    config.prominence = p;
  } else if (key == "in") {
    if (value.empty()) throw ConfigError("in: empty value");
    config.in_path = value;
  } else if (key == "states") {
    if (value.empty()) throw ConfigError("states: empty value");
    config.states_path = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected key=value");
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    try {
      apply_entry(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string canonical_text(const RunConfig& config) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("bin_width", render_double(config.bin_width));
  kv.emplace_back("coherent_offset", render_double(config.coherent_offset));
  kv.emplace_back("cognitive", render_double(config.swarm.cognitive));
  kv.emplace_back("cutoff", render_double(config.cutoff));
  kv.emplace_back("in", config.in_path);
  kv.emplace_back("inertia", render_double(config.swarm.inertia));
  kv.emplace_back("iterations", std::to_string(config.swarm.n_iterations));
  kv.emplace_back("noise", config.noise_text);
  kv.emplace_back("ops", join(config.op_labels));
  // The output directory is deliberately omitted: it has no influence on any
  // computed value, and omitting it keeps reruns into different directories
  // byte-identical.
  kv.emplace_back("particles", std::to_string(config.swarm.n_particles));
  kv.emplace_back("prominence", render_double(config.prominence));
  if (config.r_values.empty()) {
    kv.emplace_back("r", "all");
  } else {
    std::string rs;
    for (std::size_t i = 0; i < config.r_values.size(); ++i) {
      if (i) rs.push_back(',');
      rs += render_double(config.r_values[i]);
    }
    kv.emplace_back("r", rs);
  }
  kv.emplace_back("seed", config.seed_set ? std::to_string(config.swarm.seed)
                                          : std::string("unset"));
  kv.emplace_back("shots", config.eval.mode == EvalMode::Exact
                               ? std::string("exact")
                               : std::to_string(config.eval.shots));
  kv.emplace_back("smooth_sigma", render_double(config.smooth_sigma));
  kv.emplace_back("social", render_double(config.swarm.social));
  kv.emplace_back("states", config.states_path);
  kv.emplace_back("table", config.table_source);
  kv.emplace_back("velocity_clamp", render_double(config.swarm.velocity_clamp));
  kv.emplace_back("warm_iterations", std::to_string(config.sweep.warm_iterations));
  kv.emplace_back("warm_window", render_double(config.sweep.warm_halfwidth));

  // Already alphabetical by construction, but sort anyway so a future key
  // added out of order cannot silently change digests depending on where
  // it was inserted.
  std::sort(kv.begin(), kv.end());
  std::string out;
  for (const auto& [k, v] : kv) {
    out += k;
    out.push_back('=');
    out += v;
    out.push_back('\n');
  }
  return out;
}

MoleculeTable load_table(const RunConfig& config) {
  if (config.table_source == "embedded") return MoleculeTable::embedded();
  return MoleculeTable::load(config.table_source);
}

std::vector<double> resolve_r_values(const RunConfig& config,
                                     const MoleculeTable& table) {
  if (!config.r_values.empty()) {
    for (double R : config.r_values) table.row_at(R);  // validates
    return config.r_values;
  }
  std::vector<double> out;
  out.reserve(table.size());
  for (const CoefficientRow& row : table.rows()) out.push_back(row.R);
  return out;
}

void require_seed(const RunConfig& config, const std::string& context) {
  if (!config.seed_set)
    throw ConfigError(context + " requires --seed (or a seed= config entry)");
}

}  // namespace molspec
