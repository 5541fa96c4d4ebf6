// Copyright 2026 The torusinv Authors.
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

#include "torusinv/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>

#include "torusinv/curve_ring.hpp"
#include "torusinv/expression.hpp"
#include "torusinv/gauss.hpp"
#include "torusinv/restriction.hpp"

namespace torusinv::cli {

namespace {

// Diagram construction is O(c) but the order-3 count is O(c^3); past this
// cap the diagram route adds nothing over the closed forms.
constexpr std::int64_t kMaxDiagramIndex = 99;

CurveElement element_from_expr(const std::string& text, const char* command) {
  ParsedExpression parsed = parse_expression(text);
  if (parsed.uses_n)
    throw std::invalid_argument(std::string(command) +
                                " expects an expression in X and Y");
  return normal_form(to_bivariate(*parsed.root));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact arithmetic for finite-order invariants of (n,2)-torus knots",
               "torusinv"};
  app.require_subcommand(1);

  std::string reduce_expr;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "print the normal form p(X) + (q(X))*Y of an X,Y expression");
  reduce->add_option("--expr", reduce_expr, "expression in X and Y")->required();

  std::string eval_expr;
  std::int64_t eval_n = 0;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate an X,Y expression on the knot indexed by odd n");
  eval->add_option("--expr", eval_expr, "expression in X and Y")->required();
  eval->add_option("--n", eval_n, "odd knot index")->required();

  std::string decompose_expr;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "write a polynomial in n as a combination of X and Y");
  decompose_cmd->add_option("--expr", decompose_expr, "polynomial in n")
      ->required();

  int verify_max_order = 0;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "verify the structure of the restricted invariant algebra");
  verify->add_option("--max-order", verify_max_order, "largest order checked")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_json, "emit the report as JSON");

  std::int64_t invariant_n = 0;
  std::string invariant_gauss;
  CLI::App* invariant = app.add_subcommand(
      "invariant", "compute x and y from a Gauss diagram");
  CLI::Option* invariant_n_opt =
      invariant->add_option("--n", invariant_n, "odd knot index");
  CLI::Option* invariant_gauss_opt = invariant->add_option(
      "--gauss", invariant_gauss, "Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");

  std::int64_t samples_min = 0;
  std::int64_t samples_max = 0;
  std::string samples_format = "csv";
  CLI::App* samples = app.add_subcommand(
      "curve-samples", "emit (n, x, y) rows for every odd n in a range");
  samples->add_option("--min", samples_min, "lower bound")->required();
  samples->add_option("--max", samples_max, "upper bound")->required();
  samples->add_option("--format", samples_format, "output format (csv)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*reduce) {
      out << element_from_expr(reduce_expr, "reduce").str() << "\n";
    } else if (*eval) {
      out << element_from_expr(eval_expr, "eval").eval_at(eval_n).str() << "\n";
    } else if (*decompose_cmd) {
      ParsedExpression parsed = parse_expression(decompose_expr);
      if (parsed.uses_xy)
        throw std::invalid_argument("decompose expects a polynomial in n");
      const Decomposition result =
          torusinv::decompose(to_function_poly(*parsed.root));
      out << result.reassemble().str() << "\n";
    } else if (*verify) {
      const TheoremReport report = verify_theorem(verify_max_order);
      if (verify_json) {
        out << report.to_json() << "\n";
      } else {
        out << report.to_text();
        out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
      }
      if (!report.all_pass()) return 1;
    } else if (*invariant) {
      const bool have_n = invariant_n_opt->count() > 0;
      const bool have_gauss = invariant_gauss_opt->count() > 0;
      if (have_n == have_gauss)
        throw std::invalid_argument("give exactly one of --n and --gauss");
      GaussDiagram diagram;
      if (have_n) {
        if (invariant_n > kMaxDiagramIndex || invariant_n < -kMaxDiagramIndex)
          throw std::domain_error("|n| must be at most " +
                                  std::to_string(kMaxDiagramIndex));
        diagram = torus_diagram(invariant_n);
      } else {
        diagram = parse_gauss_code(invariant_gauss);
      }
      out << "x = " << (Rational(8) * v2(diagram)).str() << "\n";
      out << "y = " << (Rational(24) * v3(diagram)).str() << "\n";
    } else if (*samples) {
      if (samples_format != "csv")
        throw std::invalid_argument("unsupported format '" + samples_format +
                                    "'");
      const CurveElement gen_x = CurveElement::x();
      const CurveElement gen_y = CurveElement::y();
      out << "n,x,y\n";
      std::int64_t n = samples_min % 2 == 0 ? samples_min + 1 : samples_min;
      for (; n <= samples_max; n += 2)
        out << n << "," << gen_x.eval_at(n).str() << ","
            << gen_y.eval_at(n).str() << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace torusinv::cli
