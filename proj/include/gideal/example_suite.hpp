#pragma once

#include <string>
#include <vector>

#include "gideal/document.hpp"

namespace gideal {

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named ideals the regression suite is built from, each in its own ring.
std::vector<NamedIdeal> builtin_ideals();

/// Runs every built-in regression check; exceptions become failed checks.
std::vector<ExampleCheck> run_example_suite();

}  // namespace gideal
