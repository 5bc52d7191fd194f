// Copyright 2026 The cnot-composite Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnot {

/// Broad failure category; the CLI maps it onto its exit code.
enum class ErrorKind { validation, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Invalid grid, range or parameter.
class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// An operation's precondition on its input does not hold.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// Newton refinement hit its iteration cap or stalled.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual_norm)
      : Error(ErrorKind::numerical, what), residual_norm_(residual_norm) {}
  double residual_norm() const noexcept { return residual_norm_; }

 private:
  double residual_norm_;
};

/// Population reached the top of the truncated Fock space.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t cutoff)
      : Error(ErrorKind::numerical, what), cutoff_(cutoff) {}
  std::size_t cutoff() const noexcept { return cutoff_; }

 private:
  std::size_t cutoff_;
};

}  // namespace cnot
