#include "racg_cli/group_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "racg/error.hpp"

namespace racg::cli {

namespace {

using nlohmann::json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

CoxeterSystem parse_group(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ": " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
  }
  auto fail = [&](const std::string& where, const std::string& what) -> InputError {
    return InputError(source + ": " + where + ": " + what);
  };

  if (!doc.is_object()) throw fail("document", "expected an object with 'generators' and 'commuting_pairs'");
  for (const auto& [key, value] : doc.items())
    if (key != "generators" && key != "commuting_pairs" && key != "name")
      throw fail(key, "unknown field");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw fail("generators", "expected a list of generator names");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const auto& g = doc["generators"][i];
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!g.is_string()) throw fail(where, "expected a string");
    const std::string name = g.get<std::string>();
    if (!is_identifier(name)) throw fail(where, "'" + name + "' is not an identifier");
    if (std::find(names.begin(), names.end(), name) != names.end()) throw fail(where, "duplicate generator '" + name + "'");
    names.push_back(name);
  }
  if (names.empty()) throw fail("generators", "at least one generator is required");
  if (names.size() > 64) throw fail("generators", "at most 64 generators are supported");

  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("commuting_pairs")) {
    const auto& list = doc["commuting_pairs"];
    if (!list.is_array()) throw fail("commuting_pairs", "expected a list of pairs");
    std::set<std::string> known(names.begin(), names.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& p = list[i];
      const std::string where = "commuting_pairs[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw fail(where, "expected a pair of generator names");
      const std::string a = p[0].get<std::string>(), b = p[1].get<std::string>();
      for (const auto& x : {a, b})
        if (!known.count(x)) throw fail(where, "unknown generator '" + x + "'");
      pairs.emplace_back(a, b);
    }
  }
  try {
    return CoxeterSystem::from_names(std::move(names), pairs);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

CoxeterSystem load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), path);
}

std::string write_group(const CoxeterSystem& sys) {
  json doc;
  doc["generators"] = sys.names();
  json pairs = json::array();
  for (const auto& [a, b] : sys.commuting_pairs()) pairs.push_back({sys.name(a), sys.name(b)});
  doc["commuting_pairs"] = pairs;
  return doc.dump(2) + "\n";
}

}  // namespace racg::cli
