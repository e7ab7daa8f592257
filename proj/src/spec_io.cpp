#include "tilecs/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tilecs/error.hpp"

namespace tilecs {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& where) {
  if (!obj.is_object())
    fail_parse(where + ": expected an object");
  for (const auto& [key, value] : obj.items())
    if (!required.count(key) && !optional.count(key))
      fail_parse(where + ": unknown field '" + key + "'");
  for (const auto& key : required)
    if (!obj.contains(key))
      fail_parse(where + ": missing field '" + key + "'");
}

QuadExt quad(const json& j, const std::string& where) {
  if (j.is_string())
    return QuadExt::parse(j.get<std::string>());
  if (j.is_number_integer())
    return QuadExt(j.get<std::int64_t>());
  fail_parse(where + ": expected a number string like \"1/2+1/3*r3\"");
}

Vec2 vec2(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    fail_parse(where + ": expected a pair");
  return {quad(j[0], where), quad(j[1], where)};
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    fail_parse(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

PeriodicGraphSpec parse_spec_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("tiling spec: ") + e.what());
  }
  require_keys(doc, {"name", "basis", "classes", "templates"}, {"notes"}, "tiling spec");
  PeriodicGraphSpec spec;
  if (!doc["name"].is_string())
    fail_parse("tiling spec: name must be a string");
  spec.name = doc["name"].get<std::string>();
  if (doc.contains("notes")) {
    if (!doc["notes"].is_string())
      fail_parse("tiling spec: notes must be a string");
    spec.notes = doc["notes"].get<std::string>();
  }
  const json& basis = doc["basis"];
  if (!basis.is_array() || basis.size() != 2)
    fail_parse("tiling spec: basis must hold two vectors");
  spec.basis = {vec2(basis[0], "basis[0]"), vec2(basis[1], "basis[1]")};

  if (!doc["classes"].is_array())
    fail_parse("tiling spec: classes must be a list");
  for (std::size_t k = 0; k < doc["classes"].size(); ++k) {
    const json& c = doc["classes"][k];
    std::string where = "classes[" + std::to_string(k) + "]";
    require_keys(c, {"label", "position", "expected_degree"}, {}, where);
    if (!c["label"].is_string())
      fail_parse(where + ": label must be a string");
    spec.classes.push_back({c["label"].get<std::string>(), vec2(c["position"], where + ".position"),
                            integer(c["expected_degree"], where + ".expected_degree")});
  }

  if (!doc["templates"].is_array())
    fail_parse("tiling spec: templates must be a list");
  for (std::size_t k = 0; k < doc["templates"].size(); ++k) {
    const json& t = doc["templates"][k];
    std::string where = "templates[" + std::to_string(k) + "]";
    require_keys(t, {"class_a", "class_b", "offset"}, {}, where);
    const json& off = t["offset"];
    if (!off.is_array() || off.size() != 2)
      fail_parse(where + ": offset must be [di, dj]");
    spec.templates.push_back({integer(t["class_a"], where), integer(t["class_b"], where),
                              {integer(off[0], where), integer(off[1], where)}});
  }
  return spec;
}

PeriodicGraphSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

std::string spec_to_json(const PeriodicGraphSpec& spec) {
  auto v2 = [](const Vec2& v) { return ordered_json::array({v[0].to_string(), v[1].to_string()}); };
  ordered_json doc;
  doc["name"] = spec.name;
  doc["basis"] = ordered_json::array({v2(spec.basis[0]), v2(spec.basis[1])});
  ordered_json classes = ordered_json::array();
  for (const auto& c : spec.classes) {
    ordered_json o;
    o["label"] = c.label;
    o["position"] = v2(c.position);
    o["expected_degree"] = c.expected_degree;
    classes.push_back(std::move(o));
  }
  doc["classes"] = std::move(classes);
  ordered_json templates = ordered_json::array();
  for (const auto& t : spec.templates) {
    ordered_json o;
    o["class_a"] = t.class_a;
    o["class_b"] = t.class_b;
    o["offset"] = ordered_json::array({t.offset[0], t.offset[1]});
    templates.push_back(std::move(o));
  }
  doc["templates"] = std::move(templates);
  doc["notes"] = spec.notes;
  return doc.dump(2) + "\n";
}

}  // namespace tilecs
