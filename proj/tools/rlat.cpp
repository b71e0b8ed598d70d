#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rlat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rlat — analysis toolkit for finite residuated lattices"};
  app.require_subcommand(1);

  std::string path, format = "text", what, expr;
  int order = 0;
  std::size_t cap = rlat::cli::default_cap();

  auto* validate = app.add_subcommand("validate", "check a lattice file against the axioms");
  validate->add_option("file", path)->required();

  auto* analyze = app.add_subcommand("analyze", "full filter/spectral analysis of one lattice");
  analyze->add_option("file", path)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* audit = app.add_subcommand("audit", "run the claim catalog on a file or a whole order range");
  audit->add_option("file", path);
  audit->add_option("--enumerate", order, "audit every class of order 2..N");
  audit->add_option("--cap", cap);
  audit->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* search = app.add_subcommand("search", "search enumerated lattices for a predicate query");
  search->add_option("expr", expr)->required();
  search->add_option("--max-order", order)->required();
  search->add_option("--cap", cap);

  std::string export_format = "dot";
  auto* exp = app.add_subcommand("export", "emit DOT graphs");
  exp->add_option("file", path)->required();
  exp->add_option("--what", what)->required()->check(CLI::IsMember({"filters", "spec"}));
  exp->add_option("--format", export_format)->check(CLI::IsMember({"dot"}));

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return rlat::cli::cmd_validate(path, std::cout, std::cerr);
  if (analyze->parsed()) return rlat::cli::cmd_analyze(path, format, std::cout, std::cerr);
  if (audit->parsed()) {
    if (!path.empty() && order > 0) {
      std::cerr << "error: give either a file or --enumerate, not both\n";
      return 2;
    }
    if (order > 0)
      return rlat::cli::cmd_audit_enumerate(order, cap, format, std::cout, std::cerr);
    if (path.empty()) {
      std::cerr << "error: audit needs a file or --enumerate N\n";
      return 2;
    }
    return rlat::cli::cmd_audit_file(path, format, std::cout, std::cerr);
  }
  if (search->parsed()) return rlat::cli::cmd_search(expr, order, cap, std::cout, std::cerr);
  if (exp->parsed())
    return rlat::cli::cmd_export(path, what, export_format, std::cout, std::cerr);
  return 2;
}
