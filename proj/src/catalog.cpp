#include "tilecs/catalog.hpp"

#include <map>
#include <mutex>

#include "tilecs/bfs.hpp"
#include "tilecs/embedded.hpp"
#include "tilecs/error.hpp"
#include "tilecs/spec_io.hpp"

namespace tilecs {

namespace {

struct OrbitMeta {
  const char* label;
  const char* oeis;
  std::vector<std::int64_t> pinned;
};

struct EntryMeta {
  const char* key;
  const char* title;
  std::vector<OrbitMeta> orbits;
};

const std::vector<EntryMeta>& metadata() {
  static const std::vector<EntryMeta> meta = {
      {"square_44", "4^4", {{"vertex", "A008574", {1, 4, 8, 12, 16, 20, 24, 28}}}},
      {"cairo",
       "Cairo pentagonal",
       {{"tetravalent", "A008574", {1, 4, 8, 12, 16, 20, 24, 28}},
        {"trivalent", "A296368", {1, 3, 8, 12, 15, 20, 25, 28}}}},
      {"t32434", "3^2.4.3.4", {{"vertex", "A219529", {1, 5, 11, 16, 21, 27, 32, 37}}}},
      {"t3464", "3.4.6.4", {{"vertex", "A008574", {1, 4, 8, 12, 16, 20, 24, 28}}}},
      {"t488", "4.8^2", {{"vertex", "A008576", {1, 3, 5, 8, 11, 13, 16, 19}}}},
      {"t31212", "3.12^2", {{"vertex", "A250122", {1, 3, 4, 6, 8, 12, 14, 15}}}},
      {"t346", "3^4.6", {{"vertex", "A250120", {1, 5, 9, 15, 19, 24, 29, 33}}}},
      {"snub632",
       "snub-632 pentagonal",
       {{"hexavalent", "A298016", {1, 6, 12, 12, 24, 36, 24, 42}},
        {"trivalent_3fold", "A298015", {1, 3, 6, 15, 21, 18, 33, 48}},
        {"trivalent_asym", "A298014", {1, 3, 9, 15, 18, 27, 37, 37}}}},
      {"t36", "3^6", {{"vertex", "A008458", {1, 6, 12, 18, 24, 30, 36, 42}}}},
      {"t33344", "3^3.4^2", {{"vertex", "A008706", {1, 5, 10, 15, 20, 25, 30, 35}}}},
      {"t3636", "3.6.3.6", {{"vertex", "A008579", {1, 4, 8, 14, 18, 22, 28, 30}}}},
      {"t4612", "4.6.12", {{"vertex", "A072154", {1, 3, 5, 7, 9, 12, 15, 17}}}},
      {"t63", "6^3", {{"vertex", "A008486", {1, 3, 6, 9, 12, 15, 18, 21}}}},
  };
  return meta;
}

const EntryMeta& meta_for(const std::string& key) {
  for (const auto& m : metadata())
    if (key == m.key)
      return m;
  throw UnknownKeyError("unknown tiling '" + key + "'");
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

const BaseChoice& CatalogEntry::base(const std::string& label) const {
  for (const auto& b : bases)
    if (b.label == label)
      return b;
  std::string known;
  for (const auto& b : bases)
    known += (known.empty() ? "" : ", ") + b.label;
  throw UnknownKeyError("tiling '" + key + "' has no base '" + label + "' (known: " + known + ")");
}

namespace catalog {

const std::vector<std::string>& keys() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> out;
    for (const auto& m : metadata())
      out.emplace_back(m.key);
    return out;
  }();
  return k;
}

CatalogEntry from_spec(const std::string& key, PeriodicGraphSpec spec) {
  const EntryMeta& meta = meta_for(key);
  ValidationReport report = validate_spec(spec);
  if (!report.ok()) {
    std::string msg = "catalog spec '" + key + "' fails validation:";
    for (const auto& issue : report.issues)
      msg += "\n  " + issue;
    throw Error(msg);
  }
  CatalogEntry entry{key, meta.title, std::move(spec), {}};
  std::vector<int> owner(entry.spec.classes.size(), -1);
  for (const OrbitMeta& o : meta.orbits) {
    BaseChoice b{o.label, {}, {}, o.oeis, o.pinned};
    for (std::size_t c = 0; c < entry.spec.classes.size(); ++c)
      if (entry.spec.classes[c].label == o.label) {
        b.orbit.push_back(static_cast<int>(c));
        owner[c] = static_cast<int>(entry.bases.size());
      }
    if (b.orbit.empty())
      throw Error("catalog spec '" + key + "' has no class labelled '" + o.label + "'");
    b.base = VertexId{b.orbit.front(), 0, 0};
    entry.bases.push_back(std::move(b));
  }
  for (std::size_t c = 0; c < owner.size(); ++c)
    if (owner[c] < 0)
      throw Error("catalog spec '" + key + "': class " + std::to_string(c) + " belongs to no base orbit");

  PeriodicGraph g(entry.spec);
  for (const auto& b : entry.bases)
    for (int c : b.orbit) {
      auto got = cs_terms(g, VertexId{c, 0, 0}, kPinnedTerms - 1);
      if (got != b.pinned)
        throw Error("catalog spec '" + key + "', class " + std::to_string(c) + ": prefix " + join(got) +
                    " differs from pinned " + join(b.pinned));
    }
  return entry;
}

const CatalogEntry& get(const std::string& key) {
  static std::mutex mu;
  static std::map<std::string, CatalogEntry> cache;
  meta_for(key);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end())
    return it->second;
  auto text = find_embedded(embedded_tilings(), key);
  if (!text)
    throw Error("no embedded spec for '" + key + "'");
  return cache.emplace(key, from_spec(key, parse_spec_json(*text))).first->second;
}

std::vector<CatalogListing> list_entries() {
  std::vector<CatalogListing> out;
  for (const auto& m : metadata()) {
    CatalogListing l{m.key, m.title, {}, {}};
    for (const auto& o : m.orbits) {
      l.labels.emplace_back(o.label);
      l.oeis_refs.emplace_back(o.oeis);
    }
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace catalog
}  // namespace tilecs
