#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilecs/periodic_graph.hpp"

namespace tilecs {

enum class Role { trunk, branch, twig, burl };

std::string to_string(Role r);
Role parse_role(std::string_view s);

struct HEdge {
  VertexId a;
  VertexId b;
  Role role;
};

// A finite trunks-and-branches subgraph H around a base vertex.
struct HAnnotation {
  std::string tiling;
  VertexId base;
  int radius = 0;
  std::vector<HEdge> edges;
  std::optional<int> shift;       // level gap used for sprout counting
  std::optional<int> twig_bound;  // declared bound on twig depth
  std::string notes;
};

// {"tiling", "base": [c,i,j], "radius", "edges": [[[c,i,j],[c,i,j],"role"], ...]}
// plus optional "shift", "twig_bound", "notes". Unknown fields are rejected.
HAnnotation parse_annotation_json(std::string_view text);
HAnnotation load_annotation_file(const std::string& path);
std::string annotation_to_json(const HAnnotation& ann);

struct SproutRow {
  int n;
  std::int64_t delta;      // a(n+s) - a(n) from shells
  std::int64_t unmatched;  // level n+s vertices without a same-role chain down to level n
  bool agree() const { return delta == unmatched; }
};

struct HReport {
  bool spanning_ok = true;
  bool geodesic_ok = true;
  bool twig_ok = true;
  int twig_depth = 0;                       // longest twig run observed
  std::vector<std::int64_t> h_level_counts; // H vertices per H-distance, n <= R-1
  std::vector<SproutRow> sprouts;
  std::vector<std::string> failures;
  std::vector<VertexId> witnesses;
};

// Throws InvalidArgument if an edge is not an edge of G, leaves ball(R), or
// the base is invalid.
void check_wellformed(const PeriodicGraph& g, const HAnnotation& ann);

// H restricted to ball(R-1) is connected and covers every vertex of ball(R-1).
HReport check_spanning(const PeriodicGraph& g, const HAnnotation& ann);

// Every H vertex Q in ball(R-1) has d_H(Q, base) = d_G(Q, base), and no H
// edge joins two vertices at the same G-distance.
HReport check_geodesic(const PeriodicGraph& g, const HAnnotation& ann);

// Vertex role = role of its edges towards the base (trunk and burl count as
// trunk, then branch, then twig); the base is a trunk vertex. A level n+s
// vertex is matched when a descending H path of s edges through vertices of
// its own role reaches level n. Rows cover 0 <= n <= R-s-1.
std::vector<SproutRow> sprout_counts(const PeriodicGraph& g, const HAnnotation& ann, int shift);

// Longest descending run of twig vertices before a trunk or branch vertex.
int twig_depth(const PeriodicGraph& g, const HAnnotation& ann);

// All checks; sprouts use ann.shift when present and the geodesic check passed.
HReport check_annotation(const PeriodicGraph& g, const HAnnotation& ann);

std::string report_to_text(const HReport& r);
std::string report_to_json(const HReport& r);

}  // namespace tilecs
