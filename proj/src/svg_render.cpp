#include "tilecs/svg_render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "tilecs/error.hpp"

namespace tilecs {

namespace {

constexpr std::array<const char*, 12> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a"};

constexpr int kDigits = 12;

struct Point {
  QuadExt x;
  QuadExt y;
};

std::string num(const QuadExt& q) {
  std::string s = q.to_decimal(kDigits);
  // Trim trailing zeros; the result is still exact to 12 digits.
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    while (s.back() == '0')
      s.pop_back();
    if (s.back() == '.')
      s.pop_back();
  }
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string distance_color(int n, int modulus) {
  if (modulus < 1)
    throw InvalidArgument("palette modulus must be >= 1");
  int k = n % modulus;
  if (modulus == 1)
    return "#222222";
  return kPalette[static_cast<std::size_t>(k) % kPalette.size()];
}

std::string role_color(Role r) {
  switch (r) {
    case Role::trunk:
      return "#1f4fd6";
    case Role::branch:
      return "#1a9c2f";
    case Role::twig:
      return "#7fc8f0";
    case Role::burl:
      return "#1f4fd6";
  }
  return "#000000";
}

std::string render_svg(const PeriodicGraph& g, const VertexId& base, const RenderConfig& cfg) {
  if (cfg.radius < 0)
    throw InvalidArgument("render radius must be >= 0");
  if (cfg.scale < 1)
    throw InvalidArgument("render scale must be >= 1");
  distance_color(0, cfg.modulus);

  auto members = ball(g, base, cfg.radius);
  std::map<VertexId, int> dist;
  for (const auto& [v, d] : members)
    dist.emplace(v, d);

  const Vec2 origin = g.position(base);
  const QuadExt s(static_cast<std::int64_t>(cfg.scale));
  std::map<VertexId, Point> at;
  for (const auto& [v, d] : dist) {
    Vec2 p = g.position(v) - origin;
    at.emplace(v, Point{s * p[0], -(s * p[1])});
  }

  QuadExt lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& [v, p] : at) {
    if (p.x < lo_x) lo_x = p.x;
    if (hi_x < p.x) hi_x = p.x;
    if (p.y < lo_y) lo_y = p.y;
    if (hi_y < p.y) hi_y = p.y;
  }
  const QuadExt pad(static_cast<std::int64_t>(cfg.scale) / 2 + 4);
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  const std::string r = num(QuadExt(Rational(cfg.scale, 10)) + QuadExt(1));
  const std::string stroke = num(QuadExt(Rational(cfg.scale, 40)));

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(lo_x) + " " + num(lo_y) + " " +
         num(hi_x - lo_x) + " " + num(hi_y - lo_y) + "\" data-tiling=\"" + g.spec().name + "\" data-base=\"" +
         to_string(base) + "\" data-radius=\"" + std::to_string(cfg.radius) + "\">\n";

  auto line = [&](const Point& a, const Point& b, const std::string& color, const std::string& width,
                  const std::string& extra) {
    return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
           "\" stroke=\"" + color + "\" stroke-width=\"" + width + "\"" + extra + "/>\n";
  };

  if (cfg.edges) {
    std::set<std::pair<VertexId, VertexId>> seen;
    out += "<g class=\"edges\" stroke-linecap=\"round\">\n";
    for (const auto& [v, d] : dist)
      g.for_each_neighbor(v, [&](const VertexId& w) {
        if (!(v < w) || !dist.count(w) || !seen.emplace(v, w).second)
          return;
        out += line(at.at(v), at.at(w), "#bbbbbb", stroke, "");
      });
    out += "</g>\n";
  }

  if (cfg.overlay) {
    out += "<g class=\"overlay\" stroke-linecap=\"round\">\n";
    std::vector<HEdge> es = cfg.overlay->edges;
    std::stable_sort(es.begin(), es.end(), [](const HEdge& a, const HEdge& b) {
      return std::tie(a.a, a.b) < std::tie(b.a, b.b);
    });
    const std::string wide = num(QuadExt(Rational(cfg.scale, 10)));
    for (const auto& e : es) {
      if (!at.count(e.a) || !at.count(e.b))
        continue;
      out += line(at.at(e.a), at.at(e.b), role_color(e.role), wide, " data-role=\"" + to_string(e.role) + "\"");
    }
    out += "</g>\n";
  }

  int current = -1;
  for (const auto& [v, d] : members) {
    if (d != current) {
      if (current >= 0)
        out += "</g>\n";
      current = d;
      out += "<g class=\"shell\" data-distance=\"" + std::to_string(d) + "\" fill=\"" +
             distance_color(d, cfg.modulus) + "\">\n";
    }
    const Point& p = at.at(v);
    out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + r + "\" data-vertex=\"" + to_string(v) +
           "\"/>\n";
  }
  if (current >= 0)
    out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tilecs
