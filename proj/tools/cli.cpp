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

#include "cli.hpp"

#include "dualginv/dualginv.hpp"
#include "dualginv/dualsolve.hpp"
#include "dualginv/errors.hpp"
#include "matrix_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>

namespace dualginv::cli {

namespace {

struct Options {
  std::string format = "text";
  std::optional<double> rank_tol;
  std::optional<double> eq_tol;
  // --kind, per subcommand
  std::string inverse_kind = "dcgi";
  std::string solve_kind = "dmpgi";
  std::string verify_kind;
  std::string input;
  std::string rhs;
  std::string candidate;
};

Tolerance make_tolerance(const Options& o) {
  const double rank_tol = o.rank_tol.value_or(Tolerance::kDefaultRankTol);
  return Tolerance(rank_tol, o.eq_tol.value_or(Tolerance::kEqFactor * rank_tol));
}

InverseKind require_kind(const std::string& name) {
  if (auto k = parse_inverse_kind(name)) return *k;
  throw io::ParseError("unknown inverse kind '" + name + "' (expected mpdgi, dmpgi, dggi or dcgi)");
}

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// Reports why an inverse does not exist. Returns the exit code.
int report_not_exist(const NotExistError& e, const DualMatrix& Ah, const Options& o, const Tolerance& tol,
                     std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  nlohmann::json j = {{"exists", false}, {"message", e.what()}};
  if (const auto* d = dynamic_cast<const DmpgiNotExist*>(&e)) {
    j["dmpgi_existence"] = io::to_json(d->existence());
    if (!json_mode(o)) io::print_dmpgi_existence(out, d->existence());
    if (Ah.is_square()) {
      const ExistenceCertificate c = dual_index_is_one(Ah, tol);
      j["certificate"] = io::to_json(c);
      if (!json_mode(o)) io::print_certificate(out, c);
    }
  } else if (const auto* g = dynamic_cast<const DggiNotExist*>(&e)) {
    j["certificate"] = io::to_json(g->certificate());
    if (!json_mode(o)) io::print_certificate(out, g->certificate());
  } else if (const auto* c = dynamic_cast<const DcgiNotExist*>(&e)) {
    j["certificate"] = io::to_json(c->certificate());
    if (!json_mode(o)) io::print_certificate(out, c->certificate());
  }
  if (json_mode(o)) emit(out, j);
  return kExitNotExist;
}

DualGinvResult compute(const DualMatrix& Ah, InverseKind kind, const Tolerance& tol) {
  switch (kind) {
    case InverseKind::Mpdgi: {
      DualGinvResult r;
      r.inverse = mpdgi(Ah, tol);
      r.kind = kind;
      r.path = FormulaPath::Compact;
      r.axiom_residuals = verify_axioms(Ah, r.inverse, kind);
      return r;
    }
    case InverseKind::Dmpgi:
      return dmpgi(Ah, tol);
    case InverseKind::Dggi:
      return dggi(Ah, tol);
    case InverseKind::Dcgi:
      return dcgi(Ah, tol);
  }
  throw io::ParseError("unsupported kind");
}

int cmd_inverse(const Options& o, std::ostream& out, std::ostream& err) {
  const Tolerance tol = make_tolerance(o);
  const InverseKind kind = require_kind(o.inverse_kind);
  const DualMatrix Ah = io::read_matrix_file(o.input);
  try {
    const DualGinvResult r = compute(Ah, kind, tol);
    if (json_mode(o)) {
      emit(out, io::to_json(r));
    } else {
      io::print_result(out, r);
    }
    return kExitOk;
  } catch (const NotExistError& e) {
    return report_not_exist(e, Ah, o, tol, out, err);
  }
}

int cmd_index(const Options& o, std::ostream& out, std::ostream&) {
  const Tolerance tol = make_tolerance(o);
  const DualMatrix Ah = io::read_matrix_file(o.input);
  const ExistenceCertificate c = dual_index_is_one(Ah, tol);
  if (json_mode(o)) {
    emit(out, io::to_json(c));
  } else {
    io::print_certificate(out, c);
  }
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const Tolerance tol = make_tolerance(o);
  const InverseKind kind = require_kind(o.solve_kind);
  const DualMatrix Ah = io::read_matrix_file(o.input);
  const DualVector b(io::read_matrix_file(o.rhs));
  try {
    const DualSolveResult r = solve(Ah, b, kind, tol);
    if (json_mode(o)) {
      emit(out, io::to_json(r));
    } else {
      io::print_solve(out, r);
    }
    return kExitOk;
  } catch (const NotExistError& e) {
    return report_not_exist(e, Ah, o, tol, out, err);
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const Tolerance tol = make_tolerance(o);
  const InverseKind kind = require_kind(o.verify_kind);
  const DualMatrix Ah = io::read_matrix_file(o.input);
  const DualMatrix G = io::read_matrix_file(o.candidate);
  const AxiomResiduals r = verify_axioms(Ah, G, kind);
  double worst = 0.0;
  for (const auto& [label, value] : r) worst = std::max(worst, value);
  const double bound = product_bound(tol, Ah.max_abs(), G.max_abs());
  const bool pass = worst <= bound;
  if (json_mode(o)) {
    emit(out, {{"kind", std::string(to_string(kind))},
               {"axiom_residuals", io::to_json(r)},
               {"bound", bound},
               {"pass", pass}});
  } else {
    out << "kind: " << to_string(kind) << "\n";
    out << "axiom residuals:\n";
    io::print_residuals(out, r);
    out << "bound: " << bound << "\n";
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalized inverses of dual matrices A + eps*B", "dualginv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dualginv 0.1.0");

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--tol", o.rank_tol, "relative singular-value cutoff (rank_tol)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eq-tol", o.eq_tol, "matrix-equality tolerance (default 100 * rank_tol)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* inverse = app.add_subcommand("inverse", "compute a dual generalized inverse");
  inverse->add_option("input", o.input, "matrix file")->required();
  inverse->add_option("--kind", o.inverse_kind, "mpdgi | dmpgi | dggi | dcgi")->capture_default_str();
  add_common(inverse);

  CLI::App* index = app.add_subcommand("index", "decide dual index one and print every characterization");
  index->add_option("input", o.input, "matrix file")->required();
  add_common(index);

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve A x = b");
  solve_cmd->add_option("matrix", o.input, "matrix file")->required();
  solve_cmd->add_option("rhs", o.rhs, "right-hand side file (n x 1)")->required();
  solve_cmd->add_option("--kind", o.solve_kind, "dmpgi | dggi | dcgi")->capture_default_str();
  add_common(solve_cmd);

  CLI::App* verify = app.add_subcommand("verify", "check a candidate inverse against its defining equations");
  verify->add_option("input", o.input, "matrix file")->required();
  verify->add_option("candidate", o.candidate, "candidate inverse file")->required();
  verify->add_option("--kind", o.verify_kind, "mpdgi | dmpgi | dggi | dcgi")->required();
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (inverse->parsed()) return cmd_inverse(o, out, err);
    if (index->parsed()) return cmd_index(o, out, err);
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace dualginv::cli
