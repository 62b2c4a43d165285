#include <iostream>

#include <CLI11.hpp>

#include "polycontact/cli/commands.hpp"

using namespace polycontact::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and expression evaluation for the polycontact structure on R^{4|4}"};
  app.require_subcommand(1);

  std::vector<std::string> ids;
  std::string format = "text";
  std::optional<int> xdeg;
  auto* verify = app.add_subcommand("verify", "Run named checks (or all) and report");
  verify->add_option("ids", ids, "Check ids, comma-separated or repeated, or 'all'")->required();
  verify->add_option("--format", format, "text or structured (one JSON record per line)")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_option("--xdeg", xdeg, "x-degree bound for the ansatz solves (default 2)")->check(CLI::Range(0, 8));

  std::string expr;
  bool eval_latex = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print it in canonical form");
  eval->add_option("expr", expr, "Expression, e.g. \"[Q1, Qb1]\"")->required();
  eval->add_flag("--latex", eval_latex, "Render as LaTeX");

  std::string name;
  bool show_latex = false;
  auto* show = app.add_subcommand("show", "Print a named object (alpha, dalpha, omega, varpi, Q1, D1, P0, R, ...)");
  show->add_option("name", name, "Object name")->required();
  show->add_flag("--latex", show_latex, "Index-notation LaTeX followed by the expanded form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) {
    return run_verify(ids, format == "structured" ? ReportFormat::structured : ReportFormat::text, xdeg, std::cout,
                      std::cerr);
  }
  if (*eval) return run_eval(expr, eval_latex, std::cout, std::cerr);
  return run_show(name, show_latex, std::cout, std::cerr);
}
