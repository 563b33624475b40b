#pragma once

#include <cstdint>

#include "racg_cli/report.hpp"

namespace racg::cli {

/// Runs the property suites of every module with inputs drawn from `seed`.
/// The report lists one row per check; `passed` is false if any row failed.
ordered_json run_verify_suite(std::uint64_t seed, bool& passed);

}  // namespace racg::cli
