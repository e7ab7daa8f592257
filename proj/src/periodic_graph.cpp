#include "tilecs/periodic_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tilecs/error.hpp"

namespace tilecs {

std::string to_string(const VertexId& v) {
  return "(" + std::to_string(v.cls) + ",(" + std::to_string(v.i) + "," + std::to_string(v.j) + "))";
}

namespace {

std::string describe(const EdgeTemplate& t) {
  return "(" + std::to_string(t.class_a) + "," + std::to_string(t.class_b) + ",(" + std::to_string(t.offset[0]) +
         "," + std::to_string(t.offset[1]) + "))";
}

bool indices_ok(const PeriodicGraphSpec& spec, const EdgeTemplate& t) {
  int n = static_cast<int>(spec.classes.size());
  return t.class_a >= 0 && t.class_a < n && t.class_b >= 0 && t.class_b < n;
}

}  // namespace

ValidationReport validate_spec(const PeriodicGraphSpec& spec) {
  ValidationReport r;
  const int n = static_cast<int>(spec.classes.size());
  if (n == 0) {
    r.structure_ok = false;
    r.issues.push_back("structure: spec has no vertex classes");
  }
  for (std::size_t k = 0; k < spec.templates.size(); ++k) {
    const EdgeTemplate& t = spec.templates[k];
    if (!indices_ok(spec, t)) {
      r.structure_ok = false;
      r.issues.push_back("structure: template " + std::to_string(k) + " " + describe(t) +
                         " references a missing class");
    } else if (std::abs(t.offset[0]) > kMaxCatalogOffset || std::abs(t.offset[1]) > kMaxCatalogOffset) {
      r.structure_ok = false;
      r.issues.push_back("structure: template " + std::to_string(k) + " " + describe(t) + " has offset beyond +-" +
                         std::to_string(kMaxCatalogOffset));
    }
  }
  for (int c = 0; c < n; ++c)
    if (spec.classes[static_cast<std::size_t>(c)].expected_degree < 3) {
      r.structure_ok = false;
      r.issues.push_back("structure: class " + std::to_string(c) + " expects degree < 3");
    }
  for (std::size_t a = 0; a < spec.classes.size(); ++a)
    for (std::size_t b = a + 1; b < spec.classes.size(); ++b)
      if (spec.classes[a].position == spec.classes[b].position) {
        r.structure_ok = false;
        r.issues.push_back("structure: classes " + std::to_string(a) + " and " + std::to_string(b) +
                           " share a position");
      }
  if (!r.structure_ok) {
    r.simple_ok = r.degrees_ok = r.connected_ok = false;
    return r;
  }

  for (std::size_t k = 0; k < spec.templates.size(); ++k) {
    const EdgeTemplate& t = spec.templates[k];
    if (t.class_a == t.class_b && t.offset[0] == 0 && t.offset[1] == 0) {
      r.simple_ok = false;
      r.issues.push_back("self-loop: template " + std::to_string(k) + " " + describe(t));
    }
    for (std::size_t l = 0; l < k; ++l) {
      const EdgeTemplate& u = spec.templates[l];
      if (u == t || u == t.reversed()) {
        r.simple_ok = false;
        r.issues.push_back("parallel edge: templates " + std::to_string(l) + " and " + std::to_string(k) + " " +
                           describe(t));
      }
    }
  }

  PeriodicGraph g(spec);
  r.degrees.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    int d = g.degree(c);
    r.degrees[static_cast<std::size_t>(c)] = d;
    int want = spec.classes[static_cast<std::size_t>(c)].expected_degree;
    if (d != want || d < 3) {
      r.degrees_ok = false;
      r.issues.push_back("degree: class " + std::to_string(c) + " has degree " + std::to_string(d) + ", expected " +
                         std::to_string(want));
    }
  }

  auto reached = ball(g, VertexId{0, 0, 0}, kConnectivityRadius);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::set<VertexId> members;
  for (const auto& [v, d] : reached) {
    seen[static_cast<std::size_t>(v.cls)] = true;
    members.insert(v);
  }
  for (int c = 0; c < n; ++c)
    if (!seen[static_cast<std::size_t>(c)]) {
      r.connected_ok = false;
      r.issues.push_back("connectivity: class " + std::to_string(c) + " not reached within radius " +
                         std::to_string(kConnectivityRadius));
    }
  for (VertexId t : {VertexId{0, 1, 0}, VertexId{0, -1, 0}, VertexId{0, 0, 1}, VertexId{0, 0, -1}})
    if (!members.count(t)) {
      r.connected_ok = false;
      r.issues.push_back("connectivity: translate " + to_string(t) + " not reached within radius " +
                         std::to_string(kConnectivityRadius));
    }
  return r;
}

PeriodicGraph::PeriodicGraph(PeriodicGraphSpec spec) : spec_(std::move(spec)) {
  steps_.resize(spec_.classes.size());
  for (std::size_t k = 0; k < spec_.templates.size(); ++k) {
    const EdgeTemplate& t = spec_.templates[k];
    if (!indices_ok(spec_, t))
      throw InvalidArgument("edge template " + describe(t) + " references a missing class");
    int idx = static_cast<int>(k);
    steps_[static_cast<std::size_t>(t.class_a)].push_back({t.class_b, t.offset[0], t.offset[1], idx, true});
    steps_[static_cast<std::size_t>(t.class_b)].push_back({t.class_a, -t.offset[0], -t.offset[1], idx, false});
  }
}

int PeriodicGraph::max_degree() const {
  int m = 0;
  for (const auto& s : steps_)
    m = std::max(m, static_cast<int>(s.size()));
  return m;
}

std::int32_t PeriodicGraph::shifted(std::int32_t c, int d) {
  std::int64_t r = static_cast<std::int64_t>(c) + d;
  if (r > kSafeCell || r < -kSafeCell)
    throw OverflowError("cell coordinate " + std::to_string(r) + " outside safe range");
  return static_cast<std::int32_t>(r);
}

void PeriodicGraph::check_vertex(const VertexId& v) const {
  if (v.cls < 0 || v.cls >= num_classes())
    throw InvalidArgument("vertex class " + std::to_string(v.cls) + " out of range");
  if (v.i > kSafeCell || v.i < -kSafeCell || v.j > kSafeCell || v.j < -kSafeCell)
    throw OverflowError("vertex " + to_string(v) + " outside safe range");
}

std::vector<VertexId> PeriodicGraph::neighbors(const VertexId& v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(steps_[static_cast<std::size_t>(v.cls)].size());
  for_each_neighbor(v, [&](const VertexId& w) { out.push_back(w); });
  return out;
}

Vec2 PeriodicGraph::position(const VertexId& v) const {
  const Vec2& p = spec_.classes.at(static_cast<std::size_t>(v.cls)).position;
  return p + QuadExt(v.i) * spec_.basis[0] + QuadExt(v.j) * spec_.basis[1];
}

std::vector<VertexId> neighbors(const PeriodicGraph& g, const VertexId& v) { return g.neighbors(v); }

std::vector<std::pair<VertexId, int>> ball(const PeriodicGraph& g, const VertexId& base, int radius) {
  if (radius < 0)
    throw InvalidArgument("negative radius");
  g.check_vertex(base);
  std::unordered_map<VertexId, int, VertexIdHash> dist;
  std::deque<VertexId> queue;
  dist.emplace(base, 0);
  queue.push_back(base);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    int d = dist[v];
    if (d == radius)
      continue;
    g.for_each_neighbor(v, [&](const VertexId& w) {
      if (dist.emplace(w, d + 1).second)
        queue.push_back(w);
    });
  }
  std::vector<std::pair<VertexId, int>> out(dist.begin(), dist.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second, x.first) < std::tie(y.second, y.first);
  });
  return out;
}

}  // namespace tilecs
