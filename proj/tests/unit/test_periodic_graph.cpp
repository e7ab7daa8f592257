#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tilecs/bfs.hpp"
#include "tilecs/catalog.hpp"
#include "tilecs/error.hpp"
#include "tilecs/periodic_graph.hpp"
#include "tilecs/spec_io.hpp"

using namespace tilecs;

namespace {

PeriodicGraphSpec square_spec() {
  PeriodicGraphSpec s;
  s.name = "square";
  s.basis = {Vec2{QuadExt(1), QuadExt(0)}, Vec2{QuadExt(0), QuadExt(1)}};
  s.classes = {{"vertex", Vec2{QuadExt(0), QuadExt(0)}, 4}};
  s.templates = {{0, 0, {1, 0}}, {0, 0, {0, 1}}};
  return s;
}

std::map<VertexId, int> ball_map(const PeriodicGraph& g, const VertexId& v, int r) {
  std::map<VertexId, int> m;
  for (const auto& [w, d] : ball(g, v, r))
    m.emplace(w, d);
  return m;
}

constexpr int kPropRadius = 20;

}  // namespace

TEST_SUITE("periodic_graph") {
  TEST_CASE("square grid validates with degree 4") {
    auto r = validate_spec(square_spec());
    CHECK(r.ok());
    CHECK(r.degrees == std::vector<int>{4});
  }

  TEST_CASE("cairo degrees follow the labels") {
    const auto& e = catalog::get("cairo");
    auto r = validate_spec(e.spec);
    REQUIRE(r.ok());
    for (std::size_t c = 0; c < e.spec.classes.size(); ++c)
      CHECK(r.degrees[c] == (e.spec.classes[c].label == "tetravalent" ? 4 : 3));
  }

  TEST_CASE("violations are reported, not thrown") {
    auto dup = square_spec();
    dup.templates.push_back({0, 0, {1, 0}});
    dup.classes[0].expected_degree = 6;
    auto r = validate_spec(dup);
    CHECK_FALSE(r.simple_ok);
    CHECK_FALSE(r.ok());

    auto rev = square_spec();
    rev.templates.push_back({0, 0, {-1, 0}});
    CHECK_FALSE(validate_spec(rev).simple_ok);

    auto loop = square_spec();
    loop.templates.push_back({0, 0, {0, 0}});
    CHECK_FALSE(validate_spec(loop).simple_ok);

    auto bad = square_spec();
    bad.templates.push_back({0, 3, {0, 0}});
    CHECK_FALSE(validate_spec(bad).structure_ok);

    auto low = square_spec();
    low.classes[0].expected_degree = 5;
    CHECK_FALSE(validate_spec(low).degrees_ok);
  }

  TEST_CASE("disconnected cover is caught by the translate certificate") {
    // Templates (2,0) and (0,1) give degree 4 but split the lattice into two parallel copies.
    auto s = square_spec();
    s.templates = {{0, 0, {2, 0}}, {0, 0, {0, 1}}};
    auto r = validate_spec(s);
    CHECK(r.degrees_ok);
    CHECK_FALSE(r.connected_ok);
  }

  TEST_CASE("neighbors in canonical order") {
    PeriodicGraph g(square_spec());
    auto nb = neighbors(g, VertexId{0, 0, 0});
    CHECK(nb == std::vector<VertexId>{{0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    CHECK(catalog::get("t32434").graph().neighbors(VertexId{2, 7, -3}).size() == 5);
    PeriodicGraph t488 = catalog::get("t488").graph();
    for (int c = 0; c < t488.num_classes(); ++c)
      CHECK(t488.neighbors(VertexId{c, -4, 9}).size() == 3);
  }

  TEST_CASE("bad vertices") {
    PeriodicGraph g(square_spec());
    CHECK_THROWS_AS(g.neighbors(VertexId{1, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(g.neighbors(VertexId{0, kSafeCell, 0}), OverflowError);
    CHECK_THROWS_AS(ball(g, VertexId{0, 0, 0}, -1), InvalidArgument);
  }

  TEST_CASE("small balls") {
    PeriodicGraph g(square_spec());
    auto b0 = ball(g, VertexId{0, 0, 0}, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].second == 0);
    CHECK(ball(g, VertexId{0, 0, 0}, 2).size() == 13);
    const auto& cairo = catalog::get("cairo");
    CHECK(ball(cairo.graph(), cairo.base("trivalent").base, 2).size() == 12);
  }

  TEST_CASE("every catalog template is needed") {
    for (const auto& key : catalog::keys()) {
      const auto& spec = catalog::get(key).spec;
      for (std::size_t k = 0; k < spec.templates.size(); ++k) {
        auto cut = spec;
        cut.templates.erase(cut.templates.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK_MESSAGE(!validate_spec(cut).ok(), key << " template " << k);
      }
    }
  }

  TEST_CASE("spec JSON round trip and strictness") {
    for (const auto& key : catalog::keys()) {
      const auto& spec = catalog::get(key).spec;
      std::string text = spec_to_json(spec);
      auto back = parse_spec_json(text);
      CHECK(spec_to_json(back) == text);
    }
    std::string text = spec_to_json(square_spec());
    std::string extra = text;
    extra.insert(1, "\"colour\": 1,");
    CHECK_THROWS_AS(parse_spec_json(extra), ParseError);
    CHECK_THROWS_AS(parse_spec_json("{"), ParseError);
  }

  TEST_CASE("graph properties on every catalog tiling") {
    std::mt19937 rng(20261015);
    for (const auto& key : catalog::keys()) {
      CAPTURE(key);
      const auto& e = catalog::get(key);
      PeriodicGraph g = e.graph();
      for (const auto& b : e.bases) {
        auto dist = ball_map(g, b.base, kPropRadius);

        // Adjacency is symmetric and distances change by at most one along an edge.
        bool symmetric = true, lipschitz = true;
        for (const auto& [v, d] : dist) {
          if (d == kPropRadius)
            continue;
          for (const auto& w : g.neighbors(v)) {
            auto back = g.neighbors(w);
            symmetric = symmetric && std::find(back.begin(), back.end(), v) != back.end();
            auto it = dist.find(w);
            lipschitz = lipschitz && it != dist.end() && std::abs(it->second - d) <= 1;
          }
        }
        CHECK(symmetric);
        CHECK(lipschitz);

        // Shells partition the ball.
        std::set<VertexId> seen;
        std::size_t total = 0;
        for (int n = 0; n <= kPropRadius; ++n) {
          auto sh = shell(g, b.base, n);
          total += sh.size();
          for (const auto& v : sh) {
            CHECK(dist.at(v) == n);
            seen.insert(v);
          }
        }
        CHECK(total == dist.size());
        CHECK(seen.size() == dist.size());

        // Translation equivariance.
        VertexId moved{b.base.cls, 5, -7};
        auto shifted = ball_map(g, moved, kPropRadius);
        bool equivariant = shifted.size() == dist.size();
        for (const auto& [v, d] : dist) {
          auto it = shifted.find(VertexId{v.cls, v.i + 5, v.j - 7});
          equivariant = equivariant && it != shifted.end() && it->second == d;
        }
        CHECK(equivariant);

        // Template order and orientation do not matter.
        auto want = cs_terms(g, b.base, kPropRadius);
        for (int trial = 0; trial < 3; ++trial) {
          auto spec = e.spec;
          std::shuffle(spec.templates.begin(), spec.templates.end(), rng);
          for (auto& t : spec.templates)
            if (rng() & 1)
              t = t.reversed();
          CHECK(cs_terms(PeriodicGraph(spec), b.base, kPropRadius) == want);
        }
      }
    }
  }
}
