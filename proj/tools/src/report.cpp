#include "racg_cli/report.hpp"

namespace racg::cli {

namespace {

std::string scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const ordered_json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

std::string flat(const ordered_json& v) {
  if (!v.is_array()) return scalar(v);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += scalar(v[i]);
  }
  return out + "]";
}

void render(const ordered_json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (is_flat(value)) {
        out += pad + key + ": " + flat(value) + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (is_flat(item)) {
        out += pad + "- " + flat(item) + "\n";
      } else {
        std::string nested;
        render(item, indent + 2, nested);
        nested.replace(static_cast<std::size_t>(indent), 2, "- ");
        out += nested;
      }
    }
  } else {
    out += pad + scalar(v) + "\n";
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

}  // namespace racg::cli
