#include "corekit/json.hpp"

#include <json.hpp>

#include "corekit/errors.hpp"

namespace corekit {

using nlohmann::json;

std::string hook_table_to_json(const HookTable& t) {
  return json(t.rows()).dump();
}

HookTable hook_table_from_json(const std::string& text) {
  try {
    auto rows = json::parse(text).get<std::vector<std::vector<int>>>();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty() || (i > 0 && rows[i].size() > rows[i - 1].size()))
        throw Error(Errc::Parse, "hook table json: rows must be non-empty and non-increasing");
      for (int h : rows[i])
        if (h < 1) throw Error(Errc::Parse, "hook table json: hook lengths must be positive");
    }
    return HookTable(std::move(rows));
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("hook table json: ") + e.what());
  }
}

std::string integer_set_to_json(const std::vector<mpz_class>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr.dump();
}

std::vector<mpz_class> integer_set_from_json(const std::string& text) {
  try {
    std::vector<mpz_class> out;
    for (const auto& s : json::parse(text).get<std::vector<std::string>>()) out.emplace_back(s, 10);
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("integer set json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::Parse, "integer set json: not a decimal integer");
  }
}

}  // namespace corekit
