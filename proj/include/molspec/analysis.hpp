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

#include <map>
#include <utility>
#include <vector>

#include "molspec/hamiltonian.hpp"

namespace molspec {

/**
 * Fixed-width energy histogram with a Gaussian-smoothed companion curve.
 * The grid is padded past the data range by the full kernel radius
 * (4*sigma plus one bin), so the smoothed curve retains the entire mass
 * of the counts (to machine precision) instead of leaking at the edges.
 */
struct EnergyHistogram {
  double bin_width = 0.0;  ///< Ha
  double sigma = 0.0;      ///< Ha, smoothing kernel standard deviation
  std::vector<double> bin_centers;
  std::vector<double> counts;
  std::vector<double> smoothed;

  double total_count() const;
  double total_smoothed() const;
};

/**
 * Histogram the energies with the given bin width, then convolve with a
 * discrete Gaussian kernel (standard deviation sigma, truncated at
 * +-4*sigma and renormalized to unit sum). Defaults are 1.5 mHa bins and
 * 7.5 mHa smoothing. Empty input raises ConfigError.
 */
EnergyHistogram histogram_energies(const std::vector<double>& energies,
                                   double bin_width = 1.5e-3,
                                   double sigma = 7.5e-3);

struct Peak {
  double energy = 0.0;  ///< parabolically interpolated position
  double height = 0.0;
};

/**
 * Local maxima of the smoothed curve with prominence of at least
 * prominence_fraction times the curve maximum. Peak positions are refined
 * by parabolic interpolation through the bin and its neighbours; results
 * are sorted ascending in energy. May return an empty list.
 */
std::vector<Peak> find_peaks(const EnergyHistogram& hist,
                             double prominence_fraction = 0.05);

/** One (R, level) comparison against the exact spectrum. */
struct ErrorRow {
  double R = 0.0;
  int level = 0;
  double estimated = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
  bool within_chemical_accuracy = false;
};

/** Error rows plus per-R counts of levels inside chemical accuracy. */
struct ErrorTable {
  std::vector<ErrorRow> rows;                    ///< sorted by (R, level)
  std::vector<std::pair<double, int>> within_by_R;  ///< (R, #levels within)
};

/**
 * Compare estimated energies, keyed by (R, level index 0..3), against the
 * exact spectrum of the table rows. Every referenced R must exist in the
 * table (ConfigError otherwise).
 */
ErrorTable error_report(const std::map<std::pair<double, int>, double>& estimates,
                        const MoleculeTable& table);

}  // namespace molspec
