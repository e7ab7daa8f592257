#include "tilecs/structure_checker.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "tilecs/error.hpp"

namespace tilecs {

using nlohmann::json;

std::string to_string(Role r) {
  switch (r) {
    case Role::trunk: return "trunk";
    case Role::branch: return "branch";
    case Role::twig: return "twig";
    case Role::burl: return "burl";
  }
  return "?";
}

Role parse_role(std::string_view s) {
  if (s == "trunk") return Role::trunk;
  if (s == "branch") return Role::branch;
  if (s == "twig") return Role::twig;
  if (s == "burl") return Role::burl;
  fail_parse("unknown role '" + std::string(s) + "'");
}

namespace {

VertexId vertex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer() || !j[1].is_number_integer() ||
      !j[2].is_number_integer())
    fail_parse(where + ": expected [class, i, j]");
  return VertexId{j[0].get<int>(), j[1].get<std::int32_t>(), j[2].get<std::int32_t>()};
}

json vertex_to_json(const VertexId& v) { return json::array({v.cls, v.i, v.j}); }

using DistMap = std::unordered_map<VertexId, int, VertexIdHash>;
using Adjacency = std::unordered_map<VertexId, std::vector<std::pair<VertexId, Role>>, VertexIdHash>;

DistMap g_distances(const PeriodicGraph& g, const HAnnotation& ann) {
  DistMap d;
  for (const auto& [v, k] : ball(g, ann.base, std::max(ann.radius, 0)))
    d.emplace(v, k);
  return d;
}

Adjacency h_adjacency(const HAnnotation& ann) {
  Adjacency adj;
  for (const auto& e : ann.edges) {
    adj[e.a].emplace_back(e.b, e.role);
    adj[e.b].emplace_back(e.a, e.role);
  }
  return adj;
}

DistMap h_distances(const HAnnotation& ann, const Adjacency& adj, int max_level) {
  DistMap d;
  d.emplace(ann.base, 0);
  std::deque<VertexId> q{ann.base};
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    int k = d[v];
    if (k >= max_level)
      continue;
    auto it = adj.find(v);
    if (it == adj.end())
      continue;
    for (const auto& [w, role] : it->second)
      if (d.emplace(w, k + 1).second)
        q.push_back(w);
  }
  return d;
}

int rank(Role r) {
  switch (r) {
    case Role::trunk:
    case Role::burl: return 0;
    case Role::branch: return 1;
    case Role::twig: return 2;
  }
  return 2;
}

// Vertex roles as ranks (0 trunk, 1 branch, 2 twig).
std::unordered_map<VertexId, int, VertexIdHash> vertex_roles(const HAnnotation& ann, const Adjacency& adj,
                                                             const DistMap& dg) {
  std::unordered_map<VertexId, int, VertexIdHash> roles;
  for (const auto& [v, nbrs] : adj) {
    int best_parent = 3, best_any = 3;
    auto dv = dg.find(v);
    for (const auto& [w, role] : nbrs) {
      best_any = std::min(best_any, rank(role));
      auto dw = dg.find(w);
      if (dv != dg.end() && dw != dg.end() && dw->second == dv->second - 1)
        best_parent = std::min(best_parent, rank(role));
    }
    roles[v] = best_parent < 3 ? best_parent : best_any;
  }
  roles[ann.base] = 0;
  return roles;
}

std::vector<std::pair<VertexId, int>> by_level(const DistMap& dg) {
  std::vector<std::pair<VertexId, int>> v(dg.begin(), dg.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  return v;
}

void fail(HReport& r, const std::string& msg, const VertexId& w) {
  r.failures.push_back(msg);
  r.witnesses.push_back(w);
}

}  // namespace

HAnnotation parse_annotation_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("annotation: ") + e.what());
  }
  if (!doc.is_object())
    fail_parse("annotation: expected an object");
  static const std::set<std::string> known = {"tiling", "base", "radius", "edges", "shift", "twig_bound", "notes"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key))
      fail_parse("annotation: unknown field '" + key + "'");
  for (const char* key : {"tiling", "base", "radius", "edges"})
    if (!doc.contains(key))
      fail_parse(std::string("annotation: missing field '") + key + "'");
  HAnnotation ann;
  if (!doc["tiling"].is_string())
    fail_parse("annotation: tiling must be a string");
  ann.tiling = doc["tiling"].get<std::string>();
  ann.base = vertex_from_json(doc["base"], "annotation base");
  if (!doc["radius"].is_number_integer() || doc["radius"].get<int>() < 0)
    fail_parse("annotation: radius must be a non-negative integer");
  ann.radius = doc["radius"].get<int>();
  if (!doc["edges"].is_array())
    fail_parse("annotation: edges must be a list");
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const json& e = doc["edges"][k];
    std::string where = "annotation edge " + std::to_string(k);
    if (!e.is_array() || e.size() != 3 || !e[2].is_string())
      fail_parse(where + ": expected [[c,i,j], [c,i,j], role]");
    ann.edges.push_back({vertex_from_json(e[0], where), vertex_from_json(e[1], where), parse_role(e[2].get<std::string>())});
  }
  for (const char* key : {"shift", "twig_bound"})
    if (doc.contains(key) && (!doc[key].is_number_integer() || doc[key].get<int>() < 0))
      fail_parse(std::string("annotation: ") + key + " must be a non-negative integer");
  if (doc.contains("shift"))
    ann.shift = doc["shift"].get<int>();
  if (doc.contains("twig_bound"))
    ann.twig_bound = doc["twig_bound"].get<int>();
  if (doc.contains("notes")) {
    if (!doc["notes"].is_string())
      fail_parse("annotation: notes must be a string");
    ann.notes = doc["notes"].get<std::string>();
  }
  return ann;
}

HAnnotation load_annotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_annotation_json(ss.str());
}

std::string annotation_to_json(const HAnnotation& ann) {
  nlohmann::ordered_json doc;
  doc["tiling"] = ann.tiling;
  doc["base"] = vertex_to_json(ann.base);
  doc["radius"] = ann.radius;
  if (ann.shift)
    doc["shift"] = *ann.shift;
  if (ann.twig_bound)
    doc["twig_bound"] = *ann.twig_bound;
  if (!ann.notes.empty())
    doc["notes"] = ann.notes;
  // One edge per line keeps the files diffable.
  std::string out = doc.dump(2);
  out.pop_back();  // closing brace
  while (!out.empty() && (out.back() == '\n' || out.back() == ' '))
    out.pop_back();
  out += ",\n  \"edges\": [";
  for (std::size_t k = 0; k < ann.edges.size(); ++k) {
    const auto& e = ann.edges[k];
    out += (k ? ",\n    " : "\n    ");
    out += json::array({vertex_to_json(e.a), vertex_to_json(e.b), to_string(e.role)}).dump();
  }
  out += ann.edges.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void check_wellformed(const PeriodicGraph& g, const HAnnotation& ann) {
  if (ann.radius < 0)
    throw InvalidArgument("annotation radius is negative");
  g.check_vertex(ann.base);
  DistMap dg = g_distances(g, ann);
  for (const auto& e : ann.edges) {
    std::string name = to_string(e.a) + "-" + to_string(e.b);
    if (e.a.cls < 0 || e.a.cls >= g.num_classes() || e.b.cls < 0 || e.b.cls >= g.num_classes())
      throw InvalidArgument("annotation edge " + name + " has an invalid class");
    auto nb = g.neighbors(e.a);
    if (std::find(nb.begin(), nb.end(), e.b) == nb.end())
      throw InvalidArgument("annotation edge " + name + " is not an edge of the tiling");
    if (!dg.count(e.a) || !dg.count(e.b))
      throw InvalidArgument("annotation edge " + name + " leaves the ball of radius " + std::to_string(ann.radius));
  }
}

HReport check_spanning(const PeriodicGraph& g, const HAnnotation& ann) {
  check_wellformed(g, ann);
  HReport r;
  if (ann.radius == 0)
    return r;
  DistMap dg = g_distances(g, ann);
  const int inner = ann.radius - 1;
  HAnnotation restricted = ann;
  restricted.edges.clear();
  for (const auto& e : ann.edges)
    if (dg[e.a] <= inner && dg[e.b] <= inner)
      restricted.edges.push_back(e);
  Adjacency adj = h_adjacency(restricted);
  DistMap reached = h_distances(restricted, adj, std::numeric_limits<int>::max());
  for (const auto& [v, d] : by_level(dg)) {
    if (d > inner || reached.count(v))
      continue;
    r.spanning_ok = false;
    fail(r, "orphan: vertex " + to_string(v) + " at distance " + std::to_string(d) + " is not reached by H", v);
  }
  return r;
}

HReport check_geodesic(const PeriodicGraph& g, const HAnnotation& ann) {
  check_wellformed(g, ann);
  HReport r;
  DistMap dg = g_distances(g, ann);
  Adjacency adj = h_adjacency(ann);
  DistMap dh = h_distances(ann, adj, std::numeric_limits<int>::max());
  for (const auto& e : ann.edges)
    if (dg[e.a] == dg[e.b]) {
      r.geodesic_ok = false;
      fail(r,
           "level edge: " + to_string(e.a) + "-" + to_string(e.b) + " (" + to_string(e.role) +
               ") joins two vertices at distance " + std::to_string(dg[e.a]),
           e.a);
    }
  std::vector<std::pair<VertexId, int>> hv;
  for (const auto& [v, nbrs] : adj)
    hv.emplace_back(v, dg[v]);
  std::sort(hv.begin(), hv.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  for (const auto& [v, d] : hv) {
    if (d > ann.radius - 1)
      continue;
    auto it = dh.find(v);
    if (it == dh.end()) {
      r.geodesic_ok = false;
      fail(r, "vertex " + to_string(v) + " at distance " + std::to_string(d) + " is not connected to the base in H", v);
    } else if (it->second != d) {
      r.geodesic_ok = false;
      fail(r,
           "vertex " + to_string(v) + " has distance " + std::to_string(d) + " in G but " +
               std::to_string(it->second) + " in H",
           v);
    }
  }
  if (ann.radius >= 1) {
    r.h_level_counts.assign(static_cast<std::size_t>(ann.radius), 0);
    for (const auto& [v, d] : dh)
      if (d <= ann.radius - 1)
        ++r.h_level_counts[static_cast<std::size_t>(d)];
  }
  return r;
}

std::vector<SproutRow> sprout_counts(const PeriodicGraph& g, const HAnnotation& ann, int shift) {
  if (shift < 1)
    throw InvalidArgument("sprout shift must be positive");
  check_wellformed(g, ann);
  DistMap dg = g_distances(g, ann);
  Adjacency adj = h_adjacency(ann);
  auto roles = vertex_roles(ann, adj, dg);
  std::vector<std::int64_t> shells(static_cast<std::size_t>(ann.radius) + 1, 0);
  for (const auto& [v, d] : dg)
    ++shells[static_cast<std::size_t>(d)];

  // Longest same-role descending chain, computed level by level.
  std::unordered_map<VertexId, int, VertexIdHash> chain;
  for (const auto& [v, d] : by_level(dg)) {
    int best = 0;
    auto it = adj.find(v);
    auto rv = roles.find(v);
    if (it != adj.end() && rv != roles.end())
      for (const auto& [w, role] : it->second) {
        auto rw = roles.find(w);
        if (dg.count(w) && dg[w] == d - 1 && rw != roles.end() && rw->second == rv->second)
          best = std::max(best, chain[w] + 1);
      }
    chain[v] = best;
  }
  std::vector<SproutRow> rows;
  for (int n = 0; n <= ann.radius - shift - 1; ++n) {
    SproutRow row{n, shells[static_cast<std::size_t>(n + shift)] - shells[static_cast<std::size_t>(n)], 0};
    for (const auto& [v, d] : dg)
      if (d == n + shift && chain[v] < shift)
        ++row.unmatched;
    rows.push_back(row);
  }
  return rows;
}

int twig_depth(const PeriodicGraph& g, const HAnnotation& ann) {
  check_wellformed(g, ann);
  DistMap dg = g_distances(g, ann);
  Adjacency adj = h_adjacency(ann);
  auto roles = vertex_roles(ann, adj, dg);
  std::unordered_map<VertexId, int, VertexIdHash> run;
  int deepest = 0;
  for (const auto& [v, d] : by_level(dg)) {
    auto rv = roles.find(v);
    if (rv == roles.end() || rv->second != 2)
      continue;
    int best = std::numeric_limits<int>::max();
    for (const auto& [w, role] : adj[v]) {
      if (dg[w] != d - 1)
        continue;
      auto rw = roles.find(w);
      best = std::min(best, rw != roles.end() && rw->second == 2 ? run[w] + 1 : 1);
    }
    run[v] = best == std::numeric_limits<int>::max() ? 1 : best;
    deepest = std::max(deepest, run[v]);
  }
  return deepest;
}

HReport check_annotation(const PeriodicGraph& g, const HAnnotation& ann) {
  HReport span = check_spanning(g, ann);
  HReport r = check_geodesic(g, ann);
  r.spanning_ok = span.spanning_ok;
  r.failures.insert(r.failures.begin(), span.failures.begin(), span.failures.end());
  r.witnesses.insert(r.witnesses.begin(), span.witnesses.begin(), span.witnesses.end());
  r.twig_depth = twig_depth(g, ann);
  if (ann.twig_bound && r.twig_depth > *ann.twig_bound) {
    r.twig_ok = false;
    r.failures.push_back("twig depth " + std::to_string(r.twig_depth) + " exceeds declared bound " +
                         std::to_string(*ann.twig_bound));
  }
  if (ann.shift && r.geodesic_ok)
    r.sprouts = sprout_counts(g, ann, *ann.shift);
  return r;
}

std::string report_to_text(const HReport& r) {
  std::ostringstream out;
  out << "spanning: " << (r.spanning_ok ? "ok" : "FAIL") << "\n";
  out << "geodesic: " << (r.geodesic_ok ? "ok" : "FAIL") << "\n";
  out << "twig depth: " << r.twig_depth << (r.twig_ok ? "" : " (exceeds bound)") << "\n";
  if (!r.sprouts.empty()) {
    out << "sprouts (n: a(n+s)-a(n) / unmatched):";
    for (const auto& s : r.sprouts)
      out << " " << s.n << ":" << s.delta << "/" << s.unmatched;
    out << "\n";
  }
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
  for (std::size_t k = 0; k < shown; ++k)
    out << "  " << r.failures[k] << "\n";
  if (r.failures.size() > shown)
    out << "  ... " << (r.failures.size() - shown) << " more\n";
  return out.str();
}

std::string report_to_json(const HReport& r) {
  nlohmann::ordered_json j;
  j["spanning_ok"] = r.spanning_ok;
  j["geodesic_ok"] = r.geodesic_ok;
  j["twig_ok"] = r.twig_ok;
  j["twig_depth"] = r.twig_depth;
  j["h_level_counts"] = r.h_level_counts;
  auto sp = nlohmann::ordered_json::array();
  for (const auto& s : r.sprouts)
    sp.push_back({{"n", s.n}, {"delta", s.delta}, {"unmatched", s.unmatched}});
  j["sprouts"] = sp;
  j["failures"] = r.failures;
  auto w = nlohmann::ordered_json::array();
  for (const auto& v : r.witnesses)
    w.push_back({v.cls, v.i, v.j});
  j["witnesses"] = w;
  return j.dump();
}

}  // namespace tilecs
