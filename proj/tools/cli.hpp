#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// (or to the -o file for query commands); usage problems go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The five frozen checks on the 4-node example instance (or on a variant
/// with the same edge set): tree vertices, the length-4 edge walk, the six
/// first circuit steps, the inapplicable partition {1,2}, circuit distance 4.
std::vector<CheckResult> verify_example(const Network& network);

}  // namespace dualflow::cli
