#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lorentz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with isometries of Lorentzian lattices:\n"
               "classification, parabolic translations, moderate-growth groups,\n"
               "and translation automorphisms of rational elliptic surfaces."};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* desc;
  };
  const Sub subs[] = {
      {"classify", "classify an integral isometry (elliptic/parabolic/hyperbolic)"},
      {"growth", "norm growth of powers as CSV (n,norm) with a fitted class"},
      {"translate", "build a parabolic translation from a frame and zeta"},
      {"wazomba", "hyperbolic witness from two translations in different directions"},
      {"group", "explore a finitely generated group of isometries by word length"},
      {"halphen-rank", "rank of N and of the translation group for a fiber configuration"},
      {"halphen-gen", "generators of the translation automorphism group"},
      {"halphen-crucial", "minimal N and S with (N D - S) orthogonal to all components"},
      {"validate-config", "check a reducible-fiber configuration"},
  };

  std::string input = "-";
  std::string format;
  for (const Sub& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.desc);
    cmd->add_option("input", input, "input JSON file (default: stdin)");
    if (std::string(s.name) == "growth")
      cmd->add_option("--format", format, "output format: csv (default) or json")
          ->check(CLI::IsMember({"csv", "json"}));
  }

  CLI11_PARSE(app, argc, argv);
  const std::string name = app.get_subcommands().front()->get_name();

  if (input == "-") return lorentz::run_command(name, std::cin, std::cout, format);
  std::ifstream file(input);
  if (!file) {
    std::cout << "{\n  \"error\": \"bad_input\",\n  \"detail\": \"cannot open " << input
              << "\"\n}\n";
    return 2;
  }
  return lorentz::run_command(name, file, std::cout, format);
}
