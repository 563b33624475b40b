#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"

namespace racg::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2 };

/// Parses the command line and runs one subcommand, writing the report to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Systems used by the verification suite and the tests.
struct NamedSystem {
  std::string name;
  CoxeterSystem system;
};
/// free3: <s,t,u> free; z2sq_free_z2: s free, t and u commute; pentagon: C5 commutation.
std::vector<NamedSystem> standard_systems();

}  // namespace racg::cli
