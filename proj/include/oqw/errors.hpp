// Copyright 2026 The oqw Authors
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

#ifndef OQW_ERRORS_HPP_
#define OQW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace oqw {

/// An input violates a structural contract (normalization, trace,
/// positivity, schema, ...). The message names the contract and the
/// measured residual.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string &what)
      : std::runtime_error(what) {}
};

/// An operator pair fails to commute within tolerance.
class CommutationError : public std::runtime_error {
public:
  CommutationError(const std::string &what, double commutator_norm)
      : std::runtime_error(what), commutator_norm_(commutator_norm) {}

  /// The measured max-entry magnitude of BC - CB.
  double commutator_norm() const noexcept { return commutator_norm_; }

private:
  double commutator_norm_;
};

/// An operator fails the normality test within tolerance.
class NonNormalError : public std::runtime_error {
public:
  NonNormalError(const std::string &what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  /// The measured max-entry magnitude of M M^dag - M^dag M.
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// A computed eigendecomposition fails its own reconstruction or
/// orthonormality checks.
class DecompositionError : public std::runtime_error {
public:
  DecompositionError(const std::string &what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

} // namespace oqw

#endif // OQW_ERRORS_HPP_
