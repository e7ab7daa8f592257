#pragma once

#include <optional>
#include <string>

#include "tilecs/periodic_graph.hpp"
#include "tilecs/structure_checker.hpp"

namespace tilecs {

struct RenderConfig {
  int radius = 6;
  int modulus = 3;          // vertices at distance n get color n mod modulus
  int scale = 40;           // pixels per unit length
  bool edges = true;
  std::optional<HAnnotation> overlay;
};

// SVG 1.1 document: one <g> per distance (data-distance="n"), vertices sorted
// by class then cell inside each group, overlay edges colored by role.
// Byte-identical for identical inputs.
std::string render_svg(const PeriodicGraph& g, const VertexId& base, const RenderConfig& cfg);

// Hex color used for distance n under the given modulus.
std::string distance_color(int n, int modulus);
std::string role_color(Role r);

}  // namespace tilecs
