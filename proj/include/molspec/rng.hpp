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

#include <cstdint>
#include <random>

namespace molspec {

/** SplitMix64 finalizer; used to decorrelate derived stream seeds. */
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/**
 * Mix a base seed with up to three stream coordinates (a tag identifying
 * the purpose of the stream plus two indices, e.g. iteration and particle).
 * Any change to any coordinate yields a statistically independent stream,
 * so serial and parallel evaluation schedules draw identical numbers.
 */
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ splitmix64(tag));
  h = splitmix64(h ^ splitmix64(a));
  h = splitmix64(h ^ splitmix64(b));
  return h;
}

/**
 * Deterministic random stream. Wraps std::mt19937_64 but performs all
 * variate generation itself (the standard distributions are
 * implementation-defined), so a given seed produces the same sequence on
 * every platform and compiler.
 */
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /** Independent sub-stream for (tag, a, b); see derive_seed. */
  static RngStream derive(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t a = 0, std::uint64_t b = 0) {
    return RngStream(derive_seed(seed, tag, a, b));
  }

  std::uint64_t next_u64() { return engine_(); }

  /** Uniform double in [0, 1) with 53 random bits. */
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /** Uniform double in [lo, hi). */
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /** Bernoulli draw with success probability p. */
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace molspec
