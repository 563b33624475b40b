#pragma once

#include <string>
#include <string_view>

#include "racg/coxeter.hpp"

namespace racg::cli {

/// Parses a group description:
///
///   { "generators": ["s", "t", "u"], "commuting_pairs": [["t", "u"]] }
///
/// Generator names are identifiers ([A-Za-z_][A-Za-z0-9_]*). Unlisted pairs
/// have m = infinity. Throws InputError; syntax errors carry line and column.
CoxeterSystem parse_group(std::string_view text, const std::string& source = "<input>");

CoxeterSystem load_group_file(const std::string& path);

/// The inverse of parse_group, one generator list and one pair list.
std::string write_group(const CoxeterSystem& sys);

}  // namespace racg::cli
