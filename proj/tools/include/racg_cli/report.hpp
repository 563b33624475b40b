#pragma once

#include <string>

#include "json.hpp"

namespace racg::cli {

using nlohmann::ordered_json;

/// Indented "key: value" rendering of a report. Arrays of scalars stay on one
/// line, arrays of objects become "-" items.
std::string render_text(const ordered_json& report);

/// The JSON document with two-space indentation and a trailing newline.
std::string render_json(const ordered_json& report);

}  // namespace racg::cli
