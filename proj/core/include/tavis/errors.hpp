// Copyright 2026 The tavis Authors
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

namespace tavis {

/// Bad argument at an API boundary (non-normalized amplitudes, negative n, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown preset, malformed config file, contradictory options.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for every failure that means "the numbers are wrong", mapped to exit code 3 by the CLI.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form expression left its domain, e.g. a negative discriminant.
class NumericalDomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Probability mass lost to Fock-space truncation beyond tolerance.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The SU(2) search did not reach the closed-form optimum.
class OptimizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A density matrix failed trace, Hermiticity or positivity checks.
class ValidationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace tavis
