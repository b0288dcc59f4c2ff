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
#include "dualginv/dualginv.hpp"
#include "dualginv/dualnum.hpp"
#include "dualginv/dualsolve.hpp"

#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <stdexcept>

namespace dualginv::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix files are UTF-8 JSON objects {"real": [[...]], "dual": [[...]]}.
// "dual" is optional and defaults to zeros. A flat array is read as a column.
DualMatrix matrix_from_json(const nlohmann::json& j);
DualMatrix read_matrix_file(const std::filesystem::path& path);

nlohmann::json to_json(const RealMatrix& m);
nlohmann::json to_json(const DualMatrix& m);
nlohmann::json to_json(const DualVector& v);
nlohmann::json to_json(const ExistenceCertificate& c);
nlohmann::json to_json(const DmpgiExistence& e);
nlohmann::json to_json(const AxiomResiduals& r);
nlohmann::json to_json(const DualGinvResult& r);
nlohmann::json to_json(const DualSolveResult& r);

// Text reports print numbers at 6 significant digits.
void print_matrix(std::ostream& os, const DualMatrix& m, int indent = 2);
void print_certificate(std::ostream& os, const ExistenceCertificate& c);
void print_dmpgi_existence(std::ostream& os, const DmpgiExistence& e);
void print_residuals(std::ostream& os, const AxiomResiduals& r);
void print_result(std::ostream& os, const DualGinvResult& r);
void print_solve(std::ostream& os, const DualSolveResult& r);

}  // namespace dualginv::io
