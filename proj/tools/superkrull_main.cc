// superkrull: Krull super-dimension, one-relation analysis, regularity and
// Kähler differentials of presented superalgebras.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superkrull/errors.h"
#include "superkrull/parser.h"
#include "superkrull/report.h"

namespace {

constexpr int kParseError = 2;
constexpr int kScopeError = 3;
constexpr int kInvariantError = 4;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krull super-dimension and regularity of presented superalgebras"};
  app.set_version_flag("--version", std::string(superkrull::kToolVersion));

  std::string command;
  std::string path;
  bool json = false;
  std::string order = "grevlex";
  superkrull::CommandOptions options;

  app.add_option("command", command, "ksdim | onerel | regular | omega | oracle | experiment")
      ->required()
      ->check(CLI::IsMember(superkrull::Commands()));
  app.add_option("file", path, "presentation file")->required();
  app.add_flag("--json", json, "print the JSON report");
  app.add_option("--order", order, "monomial order for Groebner bases")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_flag("--witness", options.witness, "print the odd-parameter witness");
  app.add_option("--seed", options.seed, "experiment seed");
  app.add_option("--trials", options.trials, "experiment trial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }
  options.order = order == "lex" ? superkrull::MonomialOrder::Lex()
                                 : superkrull::MonomialOrder::Grevlex();

  try {
    const superkrull::SuperPresentation p = superkrull::ParsePresentation(ReadFile(path));
    const superkrull::CommandReport report = superkrull::RunCommand(command, p, options);
    if (json) {
      std::cout << report.ToJson().dump(2) << "\n";
    } else {
      for (const std::string& line : report.lines) std::cout << line << "\n";
    }
    return 0;
  } catch (const superkrull::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kParseError;
  } catch (const superkrull::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const superkrull::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kScopeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
}
