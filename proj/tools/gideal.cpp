#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gideal/commands.hpp"

namespace {

std::optional<std::int64_t> env_budget() {
  const char* raw = std::getenv("GIDEAL_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoll(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("GIDEAL_BUDGET", std::string("not an integer: ") + raw);
  }
}

int usage_error(const std::string& message) {
  std::cerr << "gideal: " << message << '\n';
  return gideal::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideal classes: contracted, C, D, G, with factorization and Hilbert series"};
  std::string command;
  std::string path;
  std::optional<std::int64_t> terms;
  bool as_json = false;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(gideal::command_names()));
  app.add_option("file", path, "Input document (not needed for verify-examples)");
  app.add_option("--terms", terms, "Power budget for h-polynomials (overrides GIDEAL_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "Print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gideal::kExitUsage;
  }

  gideal::CommandOptions options;
  try {
    if (auto b = env_budget()) options.budget = *b;
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  }
  if (terms) options.budget = *terms;

  std::optional<gideal::IdealDocument> doc;
  if (command != "verify-examples") {
    if (path.empty()) return usage_error(command + " needs an input file");
    std::ifstream in(path);
    if (!in) return usage_error("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      doc = gideal::parse_document(text.str());
    } catch (const gideal::Error& e) {
      return usage_error(path + ":" + e.what());
    }
  }

  const auto result = gideal::run_command(command, doc, options);
  if (as_json)
    std::cout << result.report.dump(2) << '\n';
  else
    std::cout << gideal::render_text(result.report);
  if (result.exit_code == gideal::kExitUsage && result.report.contains("error"))
    std::cerr << "gideal: " << result.report["error"].get<std::string>() << '\n';
  return result.exit_code;
}
