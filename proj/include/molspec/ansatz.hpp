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
#include <cmath>

namespace molspec {

/**
 * The six circuit parameters, all in radians:
 *   theta[0], theta[1] — qubit-1 rotation amplitude and phase
 *   theta[2], theta[3] — qubit-2 rotation amplitude and phase
 *   theta[4], theta[5] — entangler length and phase
 *
 * The optimizer works in normalized coordinates u in [0,1]^6 with the
 * linear map theta = 2*pi*u; the normalized image is the canonical
 * representation (the map round-trips to 1e-12 but is not bit-exact, so
 * positions are stored normalized and converted on demand).
 */
struct AnsatzParams {
  std::array<double, 6> theta{};

  static constexpr double kTwoPi = 6.283185307179586476925286766559;

  static AnsatzParams from_normalized(const std::array<double, 6>& u) {
    AnsatzParams p;
    for (int i = 0; i < 6; ++i) p.theta[i] = kTwoPi * u[i];
    return p;
  }

  std::array<double, 6> to_normalized() const {
    std::array<double, 6> u{};
    for (int i = 0; i < 6; ++i) u[i] = theta[i] / kTwoPi;
    return u;
  }

  /** Each angle reduced modulo 2*pi into [0, 2*pi). */
  AnsatzParams canonicalized() const {
    AnsatzParams p = *this;
    for (double& t : p.theta) {
      t = std::fmod(t, kTwoPi);
      if (t < 0.0) t += kTwoPi;
      if (t >= kTwoPi) t = 0.0;  // rounding can land exactly on the brim
    }
    return p;
  }
};

}  // namespace molspec
