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

#include "matrix_io.hpp"

#include "dualginv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace dualginv::io {

namespace {

RealMatrix parse_array(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(std::string("\"") + key + "\" must be a non-empty array");
  }
  // Flat array -> column vector.
  if (!j.front().is_array()) {
    RealMatrix m(static_cast<Eigen::Index>(j.size()), 1);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
      const double v = j[i].get<double>();
      if (!std::isfinite(v)) throw ParseError(std::string("non-finite entry in \"") + key + "\"");
      m(static_cast<Eigen::Index>(i), 0) = v;
    }
    return m;
  }
  const std::size_t cols = j.front().size();
  if (cols == 0) throw ParseError(std::string("\"") + key + "\" has an empty row");
  RealMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string("\"") + key + "\" is not rectangular (row " + std::to_string(i) + ")");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row[k].is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
      const double v = row[k].get<double>();
      if (!std::isfinite(v)) throw ParseError(std::string("non-finite entry in \"") + key + "\"");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v;
    }
  }
  return m;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

void print_real(std::ostream& os, const RealMatrix& m, int indent) {
  std::vector<std::string> cells(static_cast<std::size_t>(m.size()));
  std::size_t width = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      // Avoid printing "-0".
      const double v = m(i, k) == 0.0 ? 0.0 : m(i, k);
      auto& cell = cells[static_cast<std::size_t>(i * m.cols() + k)];
      cell = fmt(v);
      width = std::max(width, cell.size());
    }
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << std::string(static_cast<std::size_t>(indent), ' ') << "[";
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k > 0) os << ", ";
      os << std::setw(static_cast<int>(width)) << cells[static_cast<std::size_t>(i * m.cols() + k)];
    }
    os << "]\n";
  }
}

}  // namespace

DualMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix file must contain a JSON object");
  if (!j.contains("real")) throw ParseError("matrix file is missing \"real\"");
  RealMatrix real = parse_array(j.at("real"), "real");
  RealMatrix dual;
  if (j.contains("dual") && !j.at("dual").is_null()) {
    dual = parse_array(j.at("dual"), "dual");
    if (dual.rows() != real.rows() || dual.cols() != real.cols()) {
      throw ParseError("\"real\" and \"dual\" have different shapes");
    }
  } else {
    dual = RealMatrix::Zero(real.rows(), real.cols());
  }
  try {
    return DualMatrix(std::move(real), std::move(dual));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

DualMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::json to_json(const RealMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const DualMatrix& m) { return {{"real", to_json(m.real())}, {"dual", to_json(m.dual())}}; }

nlohmann::json to_json(const DualVector& v) { return to_json(v.as_matrix()); }

nlohmann::json to_json(const ExistenceCertificate& c) {
  nlohmann::json j = {
      {"dual_index_one", c.dual_index_one},
      {"index_A_one", c.index_A_one},
      {"rank_A", c.rank_A},
      {"residual_rank_block", c.residual_rank_block},
      {"residual_proj_mp", c.residual_proj_mp},
      {"zero_threshold", c.zero_threshold},
  };
  j["residual_rank_aug"] = c.residual_rank_aug ? nlohmann::json(*c.residual_rank_aug) : nlohmann::json(nullptr);
  j["residual_proj_gp"] = c.residual_proj_gp ? nlohmann::json(*c.residual_proj_gp) : nlohmann::json(nullptr);
  j["residual_block"] = c.residual_block ? nlohmann::json(*c.residual_block) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const DmpgiExistence& e) {
  return {{"exists", e.exists},
          {"residual_proj_mp", e.residual_proj_mp},
          {"residual_rank_block", e.residual_rank_block},
          {"zero_threshold", e.zero_threshold}};
}

nlohmann::json to_json(const AxiomResiduals& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, value] : r) j[label] = value;
  return j;
}

nlohmann::json to_json(const DualGinvResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"path", std::string(to_string(r.path))},
          {"inverse", to_json(r.inverse)},
          {"axiom_residuals", to_json(r.axiom_residuals)}};
}

nlohmann::json to_json(const DualSolveResult& r) {
  return {{"kind", std::string(to_string(r.inverse_kind))},
          {"particular", to_json(r.particular)},
          {"projector", to_json(r.projector)},
          {"consistent", r.consistent},
          {"error_norm", r.error_norm}};
}

void print_matrix(std::ostream& os, const DualMatrix& m, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << "real part:\n";
  print_real(os, m.real(), indent + 2);
  os << pad << "dual part:\n";
  print_real(os, m.dual(), indent + 2);
}

void print_certificate(std::ostream& os, const ExistenceCertificate& c) {
  os << "dual index one: " << (c.dual_index_one ? "true" : "false") << "\n";
  os << "index(A) one: " << (c.index_A_one ? "true" : "false") << "\n";
  os << "rank(A): " << c.rank_A << "\n";
  if (c.residual_rank_aug) {
    os << "rank([A, B(I-AA#)]): " << c.rank_A + *c.residual_rank_aug << "\n";
  } else {
    os << "rank([A, B(I-AA#)]): n/a (A# does not exist)\n";
  }
  os << "rank([B A; A 0]): " << 2 * c.rank_A + c.residual_rank_block << " (2 rank(A) = " << 2 * c.rank_A << ")\n";
  os << "max |(I-AA+)B(I-A+A)|: " << fmt(c.residual_proj_mp) << "\n";
  os << "max |(I-AA#)B(I-AA#)|: " << (c.residual_proj_gp ? fmt(*c.residual_proj_gp) : "n/a") << "\n";
  os << "max |B4 - B3 K^-1 L|: " << (c.residual_block ? fmt(*c.residual_block) : "n/a") << "\n";
  os << "zero threshold: " << fmt(c.zero_threshold) << "\n";
}

void print_dmpgi_existence(std::ostream& os, const DmpgiExistence& e) {
  os << "DMPGI exists: " << (e.exists ? "true" : "false") << "\n";
  os << "max |(I-AA+)B(I-A+A)|: " << fmt(e.residual_proj_mp) << "\n";
  os << "rank([B A; A 0]) - 2 rank(A): " << e.residual_rank_block << "\n";
  os << "zero threshold: " << fmt(e.zero_threshold) << "\n";
}

void print_residuals(std::ostream& os, const AxiomResiduals& r) {
  for (const auto& [label, value] : r) os << "  " << label << ": " << fmt(value) << "\n";
}

void print_result(std::ostream& os, const DualGinvResult& r) {
  os << "kind: " << to_string(r.kind) << "\n";
  os << "path: " << to_string(r.path) << "\n";
  os << "inverse:\n";
  print_matrix(os, r.inverse);
  os << "axiom residuals:\n";
  print_residuals(os, r.axiom_residuals);
}

void print_solve(std::ostream& os, const DualSolveResult& r) {
  os << "kind: " << to_string(r.inverse_kind) << "\n";
  os << "consistent: " << (r.consistent ? "true" : "false") << "\n";
  os << "error norm: " << fmt(r.error_norm) << "\n";
  os << "particular solution:\n";
  print_matrix(os, r.particular.as_matrix());
  os << "homogeneous projector (I - GA):\n";
  print_matrix(os, r.projector);
}

}  // namespace dualginv::io
