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

#include "molspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "molspec/errors.hpp"

namespace molspec {

double EnergyHistogram::total_count() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

double EnergyHistogram::total_smoothed() const {
  return std::accumulate(smoothed.begin(), smoothed.end(), 0.0);
}

EnergyHistogram histogram_energies(const std::vector<double>& energies,
                                   double bin_width, double sigma) {
  if (energies.empty()) {
    throw ConfigError("histogram_energies: no energies supplied");
  }
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw ConfigError("histogram_energies: bin_width must be positive");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("histogram_energies: sigma must be non-negative");
  }
  for (double e : energies) {
    if (!std::isfinite(e)) {
      throw ConfigError("histogram_energies: non-finite energy value");
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(energies.begin(), energies.end());
  // Pad by the kernel radius plus one bin so the smoothed curve keeps all
  // of the histogram mass inside the grid.
  const double pad = 4.0 * sigma + bin_width;
  const double lo = *lo_it - pad;
  const double hi = *hi_it + pad;
  const auto n_bins =
      static_cast<std::size_t>(std::ceil((hi - lo) / bin_width)) + 1;

  EnergyHistogram hist;
  hist.bin_width = bin_width;
  hist.sigma = sigma;
  hist.bin_centers.resize(n_bins);
  hist.counts.assign(n_bins, 0.0);
  for (std::size_t i = 0; i < n_bins; ++i) {
    hist.bin_centers[i] = lo + (static_cast<double>(i) + 0.5) * bin_width;
  }
  for (double e : energies) {
    auto idx = static_cast<std::ptrdiff_t>(std::floor((e - lo) / bin_width));
    idx = std::clamp<std::ptrdiff_t>(idx, 0,
                                     static_cast<std::ptrdiff_t>(n_bins) - 1);
    hist.counts[static_cast<std::size_t>(idx)] += 1.0;
  }

  if (sigma == 0.0) {
    hist.smoothed = hist.counts;
    return hist;
  }

  // Discrete Gaussian kernel truncated at +-4 sigma, renormalized so the
  // convolution conserves total mass exactly.
  const auto radius = static_cast<std::ptrdiff_t>(
      std::ceil(4.0 * sigma / bin_width));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double kernel_sum = 0.0;
  for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
    const double x = static_cast<double>(k) * bin_width / sigma;
    const double w = std::exp(-0.5 * x * x);
    kernel[static_cast<std::size_t>(k + radius)] = w;
    kernel_sum += w;
  }
  for (double& w : kernel) w /= kernel_sum;

  hist.smoothed.assign(n_bins, 0.0);
  for (std::size_t i = 0; i < n_bins; ++i) {
    if (hist.counts[i] == 0.0) continue;
    for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
      const auto j = static_cast<std::ptrdiff_t>(i) + k;
      if (j < 0 || j >= static_cast<std::ptrdiff_t>(n_bins)) continue;
      hist.smoothed[static_cast<std::size_t>(j)] +=
          hist.counts[i] * kernel[static_cast<std::size_t>(k + radius)];
    }
  }
  return hist;
}

namespace {

/// Prominence of the local maximum at index i: height above the higher of
/// the two valley floors found walking outward to the first strictly
/// higher bin (or the grid edge).
double prominence_at(const std::vector<double>& s, std::size_t i) {
  const double h = s[i];
  double left_min = h;
  for (std::size_t j = i; j-- > 0;) {
    if (s[j] > h) break;
    left_min = std::min(left_min, s[j]);
  }
  double right_min = h;
  for (std::size_t j = i + 1; j < s.size(); ++j) {
    if (s[j] > h) break;
    right_min = std::min(right_min, s[j]);
  }
  return h - std::max(left_min, right_min);
}

}  // namespace

std::vector<Peak> find_peaks(const EnergyHistogram& hist,
                             double prominence_fraction) {
  const std::vector<double>& s = hist.smoothed;
  std::vector<Peak> peaks;
  if (s.size() < 3) return peaks;
  const double s_max = *std::max_element(s.begin(), s.end());
  if (s_max <= 0.0) return peaks;
  const double min_prominence = prominence_fraction * s_max;

  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    // Strict rise on the left, non-strict on the right so that a flat-top
    // plateau yields exactly one peak (its leftmost bin).
    if (!(s[i] > s[i - 1] && s[i] >= s[i + 1])) continue;
    if (prominence_at(s, i) < min_prominence) continue;

    const double ym = s[i - 1];
    const double y0 = s[i];
    const double yp = s[i + 1];
    const double denom = ym - 2.0 * y0 + yp;
    double offset = 0.0;
    if (std::abs(denom) > std::numeric_limits<double>::epsilon() * y0) {
      offset = 0.5 * (ym - yp) / denom;
      offset = std::clamp(offset, -0.5, 0.5);
    }
    Peak p;
    p.energy = hist.bin_centers[i] + offset * hist.bin_width;
    p.height = y0 - 0.25 * (ym - yp) * offset;
    peaks.push_back(p);
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.energy < b.energy; });
  return peaks;
}

ErrorTable error_report(
    const std::map<std::pair<double, int>, double>& estimates,
    const MoleculeTable& table) {
  ErrorTable out;
  std::map<double, int> within_count;
  for (const auto& [key, value] : estimates) {
    const auto& [R, level] = key;
    if (level < 0 || level > 3) {
      throw ConfigError("error_report: level index must be in 0..3");
    }
    const CoefficientRow& row = table.row_at(R);  // throws if R unknown
    const std::array<double, 4> exact = exact_spectrum(row);

    ErrorRow er;
    er.R = R;
    er.level = level;
    er.estimated = value;
    er.exact = exact[static_cast<std::size_t>(level)];
    er.abs_error = std::abs(er.estimated - er.exact);
    er.within_chemical_accuracy = er.abs_error <= chemical_accuracy();
    out.rows.push_back(er);

    within_count.try_emplace(R, 0);
    if (er.within_chemical_accuracy) ++within_count[R];
  }
  out.within_by_R.assign(within_count.begin(), within_count.end());
  return out;
}

}  // namespace molspec
