#include <doctest.h>

#include <algorithm>

#include "tilecs/bfs.hpp"
#include "tilecs/catalog.hpp"
#include "tilecs/embedded.hpp"
#include "tilecs/error.hpp"
#include "tilecs/structure_checker.hpp"
#include "tilecs/svg_render.hpp"

using namespace tilecs;

namespace {

HAnnotation shipped(const std::string& name) {
  auto text = find_embedded(embedded_annotations(), name);
  REQUIRE(text.has_value());
  return parse_annotation_json(*text);
}

bool constant_tail(const std::vector<SproutRow>& rows, int from, std::int64_t c) {
  bool any = false;
  for (const auto& r : rows)
    if (r.n >= from) {
      any = true;
      if (!r.agree() || r.unmatched != c)
        return false;
    }
  return any;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++k;
  return k;
}

}  // namespace

TEST_SUITE("structure_checker") {
  TEST_CASE("square grid annotation") {
    auto ann = shipped("square_fig4");
    auto g = catalog::get(ann.tiling).graph();
    auto r = check_annotation(g, ann);
    CHECK(r.spanning_ok);
    CHECK(r.geodesic_ok);
    CHECK(r.witnesses.empty());
    CHECK(constant_tail(r.sprouts, 1, 4));
    auto cs = cs_terms(g, ann.base, ann.radius - 1);
    CHECK(r.h_level_counts == cs);
  }

  TEST_CASE("cairo tetravalent annotation") {
    auto ann = shipped("cairo_tetravalent");
    REQUIRE(ann.radius == 10);
    auto r = check_annotation(catalog::get(ann.tiling).graph(), ann);
    CHECK(r.spanning_ok);
    CHECK(r.geodesic_ok);
    CHECK(constant_tail(r.sprouts, 1, 4));
  }

  TEST_CASE("3^2.4.3.4 annotation at shift 3") {
    auto ann = shipped("t32434");
    auto g = catalog::get(ann.tiling).graph();
    auto r = check_annotation(g, ann);
    CHECK(r.spanning_ok);
    CHECK(r.geodesic_ok);
    CHECK(constant_tail(r.sprouts, 1, 16));
    auto terms = cs_terms(g, ann.base, ann.radius);
    for (int n = 1; n + 3 <= ann.radius; ++n)
      CHECK(terms[static_cast<std::size_t>(n + 3)] == terms[static_cast<std::size_t>(n)] + 16);
  }

  TEST_CASE("wrong guess for 3.4.6.4 has a witness") {
    auto ann = shipped("t3464_wrong_guess");
    auto r = check_annotation(catalog::get(ann.tiling).graph(), ann);
    CHECK_FALSE(r.geodesic_ok);
    CHECK_FALSE(r.witnesses.empty());
  }

  TEST_CASE("removing a branch edge orphans a vertex") {
    auto ann = shipped("square_fig4");
    auto g = catalog::get(ann.tiling).graph();
    auto it = std::find_if(ann.edges.begin(), ann.edges.end(), [](const HEdge& e) {
      return e.role == Role::branch && e.b == VertexId{0, 2, 1};
    });
    REQUIRE(it != ann.edges.end());
    ann.edges.erase(it);
    auto r = check_spanning(g, ann);
    CHECK_FALSE(r.spanning_ok);
    CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), VertexId{0, 2, 1}) != r.witnesses.end());
  }

  TEST_CASE("single trunk is geodesic but not spanning") {
    HAnnotation ann;
    ann.tiling = "square_44";
    ann.radius = 6;
    for (int x = 0; x < 6; ++x)
      ann.edges.push_back({{0, x, 0}, {0, x + 1, 0}, Role::trunk});
    auto g = catalog::get("square_44").graph();
    CHECK_FALSE(check_spanning(g, ann).spanning_ok);
    auto r = check_geodesic(g, ann);
    CHECK(r.geodesic_ok);
    CHECK(r.witnesses.empty());
  }

  TEST_CASE("radius zero") {
    HAnnotation ann;
    ann.tiling = "square_44";
    ann.radius = 0;
    auto g = catalog::get("square_44").graph();
    CHECK(check_spanning(g, ann).spanning_ok);
  }

  TEST_CASE("malformed annotations") {
    auto g = catalog::get("square_44").graph();
    HAnnotation ann;
    ann.tiling = "square_44";
    ann.radius = 3;
    ann.edges.push_back({{0, 0, 0}, {0, 1, 1}, Role::trunk});
    CHECK_THROWS_AS(check_wellformed(g, ann), InvalidArgument);
    ann.edges = {{{0, 3, 0}, {0, 4, 0}, Role::trunk}};
    CHECK_THROWS_AS(check_wellformed(g, ann), InvalidArgument);
    CHECK_THROWS_AS(parse_annotation_json(R"({"tiling":"square_44","base":[0,0,0],"radius":1,"edges":[],"x":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_role("stem"), ParseError);
  }

  TEST_CASE("annotation JSON round trip") {
    for (const auto& f : embedded_annotations()) {
      auto ann = parse_annotation_json(f.content);
      CHECK(annotation_to_json(ann) == f.content);
    }
  }
}

TEST_SUITE("svg_render") {
  TEST_CASE("glyph census") {
    auto g = catalog::get("square_44").graph();
    RenderConfig cfg;
    cfg.radius = 5;
    cfg.modulus = 1;
    std::string svg = render_svg(g, VertexId{0, 0, 0}, cfg);
    CHECK(count(svg, "<circle") == 61);
    CHECK(count(svg, "data-distance=") == 6);
    cfg.radius = 0;
    CHECK(count(render_svg(g, VertexId{0, 0, 0}, cfg), "<circle") == 1);
  }

  TEST_CASE("shell groups read back as BFS shells") {
    const auto& e = catalog::get("cairo");
    auto g = e.graph();
    VertexId base = e.base("tetravalent").base;
    RenderConfig cfg;
    cfg.radius = 9;
    std::string svg = render_svg(g, base, cfg);
    auto cs = cs_terms(g, base, 9);
    const std::string open = "<g class=\"shell\" data-distance=\"";
    int seen = 0;
    for (auto pos = svg.find(open); pos != std::string::npos; pos = svg.find(open, pos + 1)) {
      int n = std::stoi(svg.substr(pos + open.size()));
      auto end = svg.find("</g>", pos);
      CHECK(static_cast<std::int64_t>(count(svg.substr(pos, end - pos), "<circle")) == cs[static_cast<std::size_t>(n)]);
      ++seen;
    }
    CHECK(seen == 10);
  }

  TEST_CASE("deterministic bytes and overlay") {
    auto ann = shipped("cairo_tetravalent");
    auto g = catalog::get("cairo").graph();
    RenderConfig cfg;
    cfg.radius = 6;
    cfg.overlay = ann;
    std::string a = render_svg(g, ann.base, cfg);
    std::string b = render_svg(catalog::get("cairo").graph(), ann.base, cfg);
    CHECK(a == b);
    CHECK(a.find(role_color(Role::trunk)) != std::string::npos);
    CHECK(a.find(role_color(Role::branch)) != std::string::npos);
    CHECK(a.find("NaN") == std::string::npos);
  }

  TEST_CASE("bad configuration") {
    auto g = catalog::get("square_44").graph();
    RenderConfig cfg;
    cfg.radius = -1;
    CHECK_THROWS_AS(render_svg(g, VertexId{0, 0, 0}, cfg), InvalidArgument);
    cfg.radius = 2;
    cfg.modulus = 0;
    CHECK_THROWS_AS(render_svg(g, VertexId{0, 0, 0}, cfg), InvalidArgument);
  }
}
