#include <doctest.h>

#include <set>

#include "tilecs/bfs.hpp"
#include "tilecs/catalog.hpp"
#include "tilecs/error.hpp"
#include "tilecs/spec_io.hpp"

using namespace tilecs;

TEST_SUITE("catalog") {
  TEST_CASE("thirteen entries, all valid") {
    CHECK(catalog::keys().size() == 13);
    for (const auto& key : catalog::keys()) {
      const auto& e = catalog::get(key);
      CHECK(validate_spec(e.spec).ok());
      CHECK_FALSE(e.bases.empty());
    }
    CHECK(catalog::list_entries().size() == 13);
  }

  TEST_CASE("degree sets") {
    auto degrees = [](const std::string& key) {
      std::multiset<int> out;
      auto g = catalog::get(key).graph();
      for (const auto& b : catalog::get(key).bases)
        out.insert(g.degree(b.base.cls));
      return out;
    };
    CHECK(degrees("cairo") == std::multiset<int>{3, 4});
    CHECK(degrees("snub632") == std::multiset<int>{3, 3, 6});
  }

  TEST_CASE("unknown keys") {
    CHECK_THROWS_AS(catalog::get("nosuch"), UnknownKeyError);
    CHECK_THROWS_AS(catalog::get("cairo").base("pentavalent"), UnknownKeyError);
  }

  TEST_CASE("every orbit member reproduces the pinned prefix") {
    for (const auto& key : catalog::keys()) {
      const auto& e = catalog::get(key);
      auto g = e.graph();
      for (const auto& b : e.bases)
        for (int c : b.orbit)
          CHECK_MESSAGE(cs_terms(g, VertexId{c, 0, 0}, catalog::kPinnedTerms - 1) == b.pinned, key << " class " << c);
    }
  }

  TEST_CASE("from_spec rejects a spec whose prefix differs") {
    auto spec = catalog::get("t488").spec;
    CHECK_NOTHROW(catalog::from_spec("t488", spec));
    CHECK_THROWS_AS(catalog::from_spec("t3464", spec), Error);
    CHECK_THROWS_AS(catalog::from_spec("nosuch", spec), UnknownKeyError);
  }
}

TEST_SUITE("bfs") {
  TEST_CASE("known prefixes") {
    const auto& cairo = catalog::get("cairo");
    CHECK(cs_terms(cairo.graph(), cairo.base("tetravalent").base, 8) ==
          std::vector<std::int64_t>{1, 4, 8, 12, 16, 20, 24, 28, 32});
    const auto& t = catalog::get("t31212");
    CHECK(cs_terms(t.graph(), t.bases[0].base, 20) ==
          std::vector<std::int64_t>{1, 3, 4, 6, 8, 12, 14, 15, 18, 21, 22, 24, 28, 30, 30, 33, 38, 39, 38, 42, 48});
    for (const auto& key : catalog::keys())
      CHECK(cs_terms(catalog::get(key).graph(), catalog::get(key).bases[0].base, 0) == std::vector<std::int64_t>{1});
  }

  TEST_CASE("shells and distances") {
    auto g = catalog::get("square_44").graph();
    VertexId o{0, 0, 0};
    CHECK(shell(g, o, 0) == std::vector<VertexId>{o});
    CHECK(distance(g, o, VertexId{0, 2, 3}, 10) == 5);
    CHECK_FALSE(distance(g, o, VertexId{0, 2, 3}, 4).has_value());

    const auto& cairo = catalog::get("cairo");
    auto cg = cairo.graph();
    VertexId tri = cairo.base("trivalent").base;
    auto s4 = shell(cg, tri, 4);
    REQUIRE(s4.size() == 15);
    for (const auto& v : s4)
      CHECK(distance(cg, tri, v, 10) == 4);
  }

  TEST_CASE("walker agrees with the queue-based ball") {
    for (const auto& key : catalog::keys()) {
      const auto& e = catalog::get(key);
      auto g = e.graph();
      auto b = ball(g, e.bases.back().base, 25);
      std::vector<std::int64_t> counts(26, 0);
      for (const auto& [v, d] : b)
        ++counts[static_cast<std::size_t>(d)];
      CHECK(cs_terms(g, e.bases.back().base, 25) == counts);
    }
  }

  TEST_CASE("CSV and JSON round trips") {
    CoordSeq cs{"cairo", "trivalent", {1, 3, 8, 12, 15}};
    CHECK(coordseq_from_csv(to_csv(cs)) == cs);
    CHECK(coordseq_from_json(to_json(cs)) == cs);
    CHECK(coordseq_from_csv("n,a(n)\n0,1\n1,4\n").terms == std::vector<std::int64_t>{1, 4});
    CHECK_THROWS_AS(coordseq_from_csv("n,a(n)\n0,1\n2,4\n"), ParseError);
    CHECK_THROWS_AS(coordseq_from_json(R"({"tiling":"x","base":"y","terms":[1],"extra":0})"), ParseError);
  }
}
