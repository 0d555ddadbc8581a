#include "ordhom/poset_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordhom/errors.hpp"

namespace ordhom {

using nlohmann::json;

Poset poset_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PosetError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw PosetError("poset document must be a JSON object");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw PosetError("poset document needs an \"elements\" array");

  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw PosetError("\"elements\" entries must be strings");
    labels.push_back(e.get<std::string>());
  }

  std::vector<std::pair<std::size_t, std::size_t>> cover_list;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw PosetError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
        throw PosetError("each cover must be a pair [i, j] of non-negative integers");
      cover_list.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
    }
  }
  const auto n = labels.size();
  return Poset::from_covers(n, cover_list, std::move(labels));
}

Poset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PosetError("cannot open poset file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return poset_from_json(buf.str());
}

std::string poset_to_json(const Poset& p, const std::string& name) {
  json doc;
  if (!name.empty()) doc["name"] = name;
  doc["elements"] = p.labels();
  json cov = json::array();
  for (auto [lo, hi] : covers(p)) cov.push_back({lo, hi});
  doc["covers"] = cov;
  return doc.dump();
}

}  // namespace ordhom
