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

#include "dualginv/errors.hpp"

#include <sstream>
#include <utility>

namespace dualginv {

namespace {

std::string sigma_message(const char* what, double sigma_min) {
  std::ostringstream os;
  os << what << ": index of A is not one (smallest singular value of K = " << sigma_min << ")";
  return os.str();
}

std::string certificate_message(const char* what, const ExistenceCertificate& c) {
  std::ostringstream os;
  os << what << ": dual index is not one (index(A) one: " << (c.index_A_one ? "yes" : "no");
  if (c.residual_rank_aug) os << ", rank([A, B(I-AA#)]) - rank(A) = " << *c.residual_rank_aug;
  os << ")";
  return os.str();
}

}  // namespace

GroupInverseNotExist::GroupInverseNotExist(double sigma_min)
    : NotExistError(sigma_message("group inverse does not exist", sigma_min)), sigma_min_(sigma_min) {}

CoreInverseNotExist::CoreInverseNotExist(double sigma_min)
    : NotExistError(sigma_message("core inverse does not exist", sigma_min)), sigma_min_(sigma_min) {}

DmpgiNotExist::DmpgiNotExist(DmpgiExistence existence)
    : NotExistError([&] {
        std::ostringstream os;
        os << "DMPGI does not exist: |(I-AA+)B(I-A+A)|_max = " << existence.residual_proj_mp
           << ", rank([B A; A 0]) - 2 rank(A) = " << existence.residual_rank_block;
        return os.str();
      }()),
      existence_(existence) {}

DggiNotExist::DggiNotExist(ExistenceCertificate certificate)
    : NotExistError(certificate_message("DGGI does not exist", certificate)),
      certificate_(std::move(certificate)) {}

DcgiNotExist::DcgiNotExist(ExistenceCertificate certificate)
    : NotExistError(certificate_message("DCGI does not exist", certificate)),
      certificate_(std::move(certificate)) {}

InternalFormulaMismatch::InternalFormulaMismatch(const std::string& what, double discrepancy)
    : Error([&] {
        std::ostringstream os;
        os << what << " (discrepancy " << discrepancy << ")";
        return os.str();
      }()),
      discrepancy_(discrepancy) {}

}  // namespace dualginv
