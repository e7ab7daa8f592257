#include <doctest.h>

#include <stdexcept>

#include "tilecs/bfs.hpp"
#include "tilecs/catalog.hpp"
#include "tilecs/error.hpp"
#include "tilecs/formula_oracle.hpp"
#include "tilecs/gf_fit.hpp"

using namespace tilecs;

namespace {

const ClosedFormSpec& form_of(const std::string& tiling, const std::string& base, FormKind kind) {
  const FormBinding* fb = find_forms(tiling, base);
  REQUIRE(fb != nullptr);
  for (const auto& f : fb->forms)
    if (f.kind == kind)
      return f;
  FAIL("no form of that kind");
  throw std::logic_error("unreachable");
}

CoordSeq bfs_seq(const std::string& key, const std::string& base, int n) {
  const auto& e = catalog::get(key);
  return coordination_sequence(e.graph(), e.base(base).base, n);
}

std::vector<std::int64_t> prefix(const std::vector<std::int64_t>& v, int n) {
  return {v.begin(), v.begin() + n + 1};
}

}  // namespace

TEST_SUITE("formula_oracle") {
  TEST_CASE("spot values") {
    CHECK(eval_closed_form(form_of("cairo", "trivalent", FormKind::piecewise_linear), 10) == 41);
    CHECK(eval_closed_form(form_of("t32434", "vertex", FormKind::piecewise_linear), 7) == 37);
    CHECK(eval_closed_form(form_of("snub632", "trivalent_asym", FormKind::piecewise_linear), 9) == 57);
    CHECK(eval_closed_form(form_of("square_44", "vertex", FormKind::piecewise_linear), 0) == 1);
    CHECK_THROWS_AS(eval_closed_form(form_of("square_44", "vertex", FormKind::piecewise_linear), -1),
                    InvalidArgument);
  }

  TEST_CASE("eval_range agrees with pointwise evaluation") {
    for (const auto& fb : builtin_forms())
      for (const auto& f : fb.forms) {
        auto range = eval_range(f, 40);
        for (int n = 0; n <= 40; ++n)
          CHECK(range[static_cast<std::size_t>(n)] == eval_closed_form(f, n));
      }
  }

  TEST_CASE("forms against BFS") {
    CHECK(verify_against(bfs_seq("t3464", "vertex", 60), form_of("t3464", "vertex", FormKind::piecewise_linear)).pass);
    auto floor_check = verify_against(bfs_seq("t32434", "vertex", 300), form_of("t32434", "vertex", FormKind::floor_form), 1);
    CHECK(floor_check.pass);
    CHECK(floor_check.from == 1);
    CHECK(floor_check.to == 300);
  }

  TEST_CASE("mismatches are located") {
    CoordSeq ones{"fake", "vertex", std::vector<std::int64_t>(10, 1)};
    auto r = verify_against(ones, form_of("square_44", "vertex", FormKind::piecewise_linear));
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->n == 1);
    CHECK(r.first_mismatch->expected == 4);
    CHECK(r.first_mismatch->got == 1);
  }

  TEST_CASE("the n = 2 exception of the cairo trivalent form is required") {
    auto f = form_of("cairo", "trivalent", FormKind::piecewise_linear);
    auto seq = bfs_seq("cairo", "trivalent", 40);
    CHECK(verify_against(seq, f).pass);
    std::erase_if(f.exceptions, [](const auto& e) { return e.first == 2; });
    auto r = verify_against(seq, f);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->n == 2);
    CHECK(r.first_mismatch->expected == 9);
  }

  TEST_CASE("4.8^2 shift constant is 8, not 24") {
    auto f = form_of("t488", "vertex", FormKind::shift_recurrence);
    CHECK(f.constant == 8);
    auto seq = bfs_seq("t488", "vertex", 60);
    CHECK(verify_against(seq, f).pass);
    f.constant = 24;
    CHECK_FALSE(verify_against(seq, f).pass);
  }

  TEST_CASE("sector tally") {
    CHECK(sector_tally_total(8) == 18);
    CHECK(sector_tally_total(12) == 28);
    CHECK(sector_tally_rows(8).size() == 8);
    auto seq = bfs_seq("t31212", "vertex", 120);
    for (int n = 3; n <= 120; ++n)
      CHECK(sector_tally_total(n) == seq.terms[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("shape checks") {
    ClosedFormSpec f;
    f.kind = FormKind::piecewise_linear;
    f.modulus = 2;
    f.residues = {{1, 0}};
    CHECK_THROWS_AS(f.check(), InvalidArgument);
  }
}

TEST_SUITE("gf_fit") {
  TEST_CASE("linear and constant sequences") {
    std::vector<std::int64_t> lin{1};
    for (int n = 1; n <= 30; ++n)
      lin.push_back(4 * n);
    auto rec = find_recurrence(lin);
    REQUIRE(rec);
    CHECK(rec->order == 2);
    CHECK(rec->threshold == 3);
    CHECK(rec->coefficients == std::vector<Rational>{Rational(2), Rational(-1)});
    auto gf = to_rational_gf(lin, *rec);
    CHECK(gf == RationalGF{{1, 2, 1}, {1, -2, 1}});
    CHECK(predict(gf, 100) == 400);
    CHECK(predict(*rec, 100) == 400);

    std::vector<std::int64_t> ones(30, 1);
    auto r1 = find_recurrence(ones);
    REQUIRE(r1);
    CHECK(r1->order == 1);
    CHECK(r1->threshold == 1);
    CHECK(r1->coefficients == std::vector<Rational>{Rational(1)});
    auto g1 = to_rational_gf(ones, *r1);
    CHECK(g1 == RationalGF{{1}, {1, -1}});
    CHECK(predict(g1, 7) == 1);
  }

  TEST_CASE("too few terms") {
    CHECK_THROWS_AS(find_recurrence({1, 4, 8, 12, 16}), InsufficientTerms);
    CHECK(required_terms(FitBounds{2, 0}) == 9);
  }

  TEST_CASE("3^4.6 fit predicts far beyond the data") {
    auto seq = bfs_seq("t346", "vertex", 110);
    auto rec = find_recurrence(prefix(seq.terms, 40));
    REQUIRE(rec);
    CHECK(rec->order == 6);
    CHECK(rec->threshold == 7);
    CHECK(rec->coefficients ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)});
    auto gf = to_rational_gf(prefix(seq.terms, 40), *rec);
    CHECK(predict(gf, 103) == seq.terms[103]);
    CHECK(series(gf, 110) == seq.terms);
    CHECK(unit_circle_period(gf) == 5);
  }

  TEST_CASE("4.8^2 GF") {
    auto seq = bfs_seq("t488", "vertex", 120);
    auto rec = find_recurrence(prefix(seq.terms, 60));
    REQUIRE(rec);
    auto gf = to_rational_gf(prefix(seq.terms, 60), *rec);
    // Denominator divides (1 - x)(1 - x^3) = 1 - x - x^3 + x^4.
    CHECK(gf.denominator == std::vector<std::int64_t>{1, -1, 0, -1, 1});
    CHECK(series(gf, 120) == seq.terms);
  }

  TEST_CASE("every catalog sequence has a small-period rational GF") {
    for (const auto& key : catalog::keys())
      for (const auto& b : catalog::get(key).bases) {
        CAPTURE(key);
        CAPTURE(b.label);
        auto terms = cs_terms(catalog::get(key).graph(), b.base, 120);
        auto rec = find_recurrence(prefix(terms, 60));
        REQUIRE(rec);
        auto gf = to_rational_gf(prefix(terms, 60), *rec);
        CHECK(gf.denominator[0] == 1);
        CHECK(series(gf, 120) == terms);
        auto period = unit_circle_period(gf);
        REQUIRE(period);
        CHECK(*period <= 12);
      }
  }

  TEST_CASE("printing") {
    CHECK(poly_to_string({1, 2, 1}) == "1 + 2x + x^2");
    CHECK(poly_to_string({1, -1}) == "1 - x");
    CHECK(to_string(RationalGF{{1, 2, 1}, {1, -2, 1}}) == "(1 + 2x + x^2) / (1 - 2x + x^2)");
  }
}
