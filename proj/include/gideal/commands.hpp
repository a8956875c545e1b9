#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gideal/document.hpp"
#include "gideal/hilbert.hpp"

namespace gideal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  /// Power budget for h-polynomials.
  std::int64_t budget = kDefaultTermBudget;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

/// Runs `cmd` on every ideal of `doc` (verify-examples ignores `doc`).
/// Reports have sorted keys; a command that cannot be carried out for some
/// ideal records an "error" entry for it and yields kExitMathFailure.
CommandResult run_command(std::string_view cmd, const std::optional<IdealDocument>& doc,
                          const CommandOptions& options = {});

/// Plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace gideal
