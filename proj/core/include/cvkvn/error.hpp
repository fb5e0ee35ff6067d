// Copyright 2026 The cvkvn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace cvkvn {

/// Operand shapes disagree (variable count, mode count, grid layout).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates a structural assumption of the KvN compilation
/// pipeline (separable Hamiltonian, quartic degree bound, ...).
///
/// `assumption()` names the violated assumption so that callers such as the
/// CLI can point the user at it.
class AssumptionViolation : public std::invalid_argument {
 public:
  AssumptionViolation(std::string assumption, const std::string& what)
      : std::invalid_argument(what), assumption_(std::move(assumption)) {}
  const std::string& assumption() const noexcept { return assumption_; }

 private:
  std::string assumption_;
};

/// A nested-commutator series did not vanish within the allowed depth.
class NonTerminatingSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical trajectory left the finite range.
class NumericalBlowUp : public std::runtime_error {
 public:
  NumericalBlowUp(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace cvkvn
