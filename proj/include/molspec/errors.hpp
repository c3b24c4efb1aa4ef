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

#include <stdexcept>
#include <string>

namespace molspec {

/**
 * User-input problems: unparseable config files, unknown labels, missing
 * table rows, absent seeds, unreadable paths. The CLI maps these to exit
 * code 2.
 */
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Numeric-health problems: non-Hermitian inputs, eigensolver
 * non-convergence, overlap matrices with significantly negative
 * eigenvalues, expectation values with large imaginary residues. These
 * signal a corrupt state or matrix rather than a bad config. The CLI maps
 * them to exit code 3.
 */
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace molspec
