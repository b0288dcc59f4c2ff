// Copyright 2026 The dualginv Authors
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

#include "dualginv/certificate.hpp"

#include <stdexcept>
#include <string>

namespace dualginv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (non-finite entries, a
/// non-symmetric matrix where symmetry is required, an unsupported kind).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Base for every "this inverse does not exist" outcome.
class NotExistError : public Error {
 public:
  using Error::Error;
};

class GroupInverseNotExist : public NotExistError {
 public:
  explicit GroupInverseNotExist(double smallest_singular_value_of_k);
  double smallest_singular_value() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

class CoreInverseNotExist : public NotExistError {
 public:
  explicit CoreInverseNotExist(double smallest_singular_value_of_k);
  double smallest_singular_value() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

class DmpgiNotExist : public NotExistError {
 public:
  explicit DmpgiNotExist(DmpgiExistence existence);
  const DmpgiExistence& existence() const noexcept { return existence_; }

 private:
  DmpgiExistence existence_;
};

class DggiNotExist : public NotExistError {
 public:
  explicit DggiNotExist(ExistenceCertificate certificate);
  const ExistenceCertificate& certificate() const noexcept { return certificate_; }

 private:
  ExistenceCertificate certificate_;
};

class DcgiNotExist : public NotExistError {
 public:
  explicit DcgiNotExist(ExistenceCertificate certificate);
  const ExistenceCertificate& certificate() const noexcept { return certificate_; }

 private:
  ExistenceCertificate certificate_;
};

/// Equivalent existence tests disagreed. Signals an input too close to the
/// rank cutoff to decide.
class InconsistentCertificate : public Error {
 public:
  using Error::Error;
};

/// Two routes that must coincide (compact vs block DCGI, simple vs general
/// form, ...) differ by more than the equality tolerance.
class InternalFormulaMismatch : public Error {
 public:
  InternalFormulaMismatch(const std::string& what, double discrepancy);
  double discrepancy() const noexcept { return discrepancy_; }

 private:
  double discrepancy_;
};

}  // namespace dualginv
