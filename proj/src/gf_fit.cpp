#include "tilecs/gf_fit.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tilecs/error.hpp"

namespace tilecs {

namespace {

using Poly = std::vector<mpq_class>;

mpz_class big(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_class(static_cast<long>(v));
}

std::int64_t small(const mpz_class& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()))
    throw OverflowError("coefficient does not fit in 64 bits");
  return z.get_si();
}

Rational to_rational(const mpq_class& q) { return Rational(small(q.get_num()), small(q.get_den())); }

mpq_class to_mpq(const Rational& r) {
  mpq_class q(big(r.num()), big(r.den()));
  q.canonicalize();
  return q;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b. b must be nonzero.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a)
      c /= lead;
  }
  return a;
}

// Clears denominators and removes the content; keeps the sign of p[0] for the
// denominator convention applied by the caller.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> integral_pair(const Poly& n, const Poly& d) {
  mpz_class l = 1;
  for (const Poly* p : {&n, &d})
    for (const auto& c : *p)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ni, di;
  mpz_class g = 0;
  for (const auto& c : n) {
    mpq_class s = c * l;
    ni.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  for (const auto& c : d) {
    mpq_class s = c * l;
    di.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
  }
  if (g == 0)
    g = 1;
  if (!di.empty() && di[0] < 0)
    g = -g;
  std::vector<std::int64_t> no, dout;
  for (auto& c : ni)
    no.push_back(small(mpz_class(c / g)));
  for (auto& c : di)
    dout.push_back(small(mpz_class(c / g)));
  if (no.empty())
    no.push_back(0);
  return {no, dout};
}

// Solves the d x d system for the coefficients using rows n0..n0+d-1.
// Free variables are set to zero; nullopt if inconsistent.
std::optional<std::vector<mpq_class>> solve(const std::vector<mpz_class>& a, int n0, int d) {
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(d), std::vector<mpq_class>(static_cast<std::size_t>(d) + 1));
  for (int r = 0; r < d; ++r) {
    int n = n0 + r;
    for (int i = 1; i <= d; ++i)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(n - i)];
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(n)];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < d && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][static_cast<std::size_t>(col)] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][static_cast<std::size_t>(col)];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][static_cast<std::size_t>(col)] == 0)
        continue;
      mpq_class f = m[r][static_cast<std::size_t>(col)];
      for (std::size_t c = 0; c < m[r].size(); ++c)
        m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r][static_cast<std::size_t>(d)] != 0)
      return std::nullopt;
  std::vector<mpq_class> c(static_cast<std::size_t>(d), 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    c[static_cast<std::size_t>(pivot_col[r])] = m[r][static_cast<std::size_t>(d)];
  return c;
}

}  // namespace

int required_terms(const FitBounds& b) { return 2 * b.max_order + b.max_transient + kFitSlack; }

FitBounds default_bounds(std::size_t n_terms) {
  FitBounds b;
  int n = static_cast<int>(n_terms);
  b.max_order = std::clamp((n - kFitSlack - b.max_transient) / 2, 1, 20);
  return b;
}

std::optional<RecurrenceSpec> find_recurrence(const std::vector<std::int64_t>& terms, const FitBounds& bounds) {
  if (bounds.max_order < 1 || bounds.max_transient < 0)
    throw InvalidArgument("fit bounds must allow order >= 1 and transient >= 0");
  if (static_cast<int>(terms.size()) < required_terms(bounds))
    throw InsufficientTerms("fit needs at least " + std::to_string(required_terms(bounds)) + " terms, got " +
                            std::to_string(terms.size()));
  const int N = static_cast<int>(terms.size());
  std::vector<mpz_class> a;
  a.reserve(terms.size());
  for (auto t : terms)
    a.push_back(big(t));

  for (int n0 = 1; n0 <= bounds.max_transient; ++n0) {
    for (int d = 1; d <= std::min(n0, bounds.max_order); ++d) {
      if (N - (n0 + d) < d + kFitSlack)
        continue;
      auto c = solve(a, n0, d);
      if (!c)
        continue;
      bool ok = true;
      for (int n = n0 + d; n < N && ok; ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= d; ++i)
          s += (*c)[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(n - i)];
        ok = (s == a[static_cast<std::size_t>(n)]);
      }
      if (!ok)
        continue;
      RecurrenceSpec rec;
      rec.order = d;
      rec.threshold = n0;
      for (const auto& x : *c)
        rec.coefficients.push_back(to_rational(x));
      rec.seeds.assign(terms.begin(), terms.begin() + (n0 + d));
      return rec;
    }
  }
  return std::nullopt;
}

std::optional<RecurrenceSpec> find_recurrence(const std::vector<std::int64_t>& terms) {
  return find_recurrence(terms, default_bounds(terms.size()));
}

RationalGF to_rational_gf(const std::vector<std::int64_t>& terms, const RecurrenceSpec& rec) {
  if (static_cast<int>(terms.size()) < rec.threshold)
    throw InvalidArgument("not enough terms for the recurrence transient");
  Poly q{1};
  for (const auto& c : rec.coefficients)
    q.push_back(-to_mpq(c));
  trim(q);
  // Q(x) * A(x) is a polynomial of degree < n0 when the recurrence holds.
  Poly n(static_cast<std::size_t>(rec.threshold), 0);
  for (int k = 0; k < rec.threshold; ++k)
    for (int i = 0; i <= k && i < static_cast<int>(q.size()); ++i)
      n[static_cast<std::size_t>(k)] += q[static_cast<std::size_t>(i)] * big(terms[static_cast<std::size_t>(k - i)]);
  trim(n);
  Poly g = gcd(n, q);
  if (!g.empty() && g.size() > 1) {
    Poly quo, rem;
    divmod(n, g, quo, rem);
    n = quo;
    divmod(q, g, quo, rem);
    q = quo;
  } else if (n.empty()) {
    q = {1};
  }
  mpq_class q0 = q[0];
  for (auto& c : n)
    c /= q0;
  for (auto& c : q)
    c /= q0;
  auto [ni, di] = integral_pair(n, q);
  return {ni, di};
}

std::vector<std::int64_t> series(const RationalGF& gf, int n_max) {
  if (gf.denominator.empty() || gf.denominator[0] == 0)
    throw InvalidArgument("generating function denominator vanishes at 0");
  std::vector<mpq_class> b;
  std::vector<std::int64_t> out;
  mpq_class d0 = big(gf.denominator[0]);
  for (int n = 0; n <= n_max; ++n) {
    mpq_class s = n < static_cast<int>(gf.numerator.size()) ? mpq_class(big(gf.numerator[static_cast<std::size_t>(n)])) : mpq_class(0);
    for (std::size_t i = 1; i < gf.denominator.size() && static_cast<int>(i) <= n; ++i)
      s -= mpq_class(big(gf.denominator[i])) * b[static_cast<std::size_t>(n) - i];
    s /= d0;
    if (s.get_den() != 1)
      throw InvalidArgument("series coefficient a(" + std::to_string(n) + ") is not an integer");
    b.push_back(s);
    out.push_back(small(s.get_num()));
  }
  return out;
}

std::int64_t predict(const RationalGF& gf, int n) {
  if (n < 0)
    throw InvalidArgument("index must be non-negative");
  return series(gf, n).back();
}

std::int64_t predict(const RecurrenceSpec& rec, int n) {
  if (n < 0)
    throw InvalidArgument("index must be non-negative");
  if (n < static_cast<int>(rec.seeds.size()))
    return rec.seeds[static_cast<std::size_t>(n)];
  std::vector<mpq_class> a;
  for (auto s : rec.seeds)
    a.emplace_back(big(s));
  std::vector<mpq_class> c;
  for (const auto& x : rec.coefficients)
    c.push_back(to_mpq(x));
  for (int k = static_cast<int>(a.size()); k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= rec.order; ++i)
      s += c[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(k - i)];
    if (s.get_den() != 1)
      throw InvalidArgument("recurrence leaves the integers at n=" + std::to_string(k));
    a.push_back(s);
  }
  return small(a.back().get_num());
}

std::optional<int> unit_circle_period(const RationalGF& gf, int l_max) {
  Poly d;
  for (auto c : gf.denominator)
    d.emplace_back(big(c));
  trim(d);
  for (int L = 1; L <= l_max; ++L) {
    Poly base(static_cast<std::size_t>(L) + 1, 0);
    base[0] = 1;
    base[static_cast<std::size_t>(L)] = -1;
    Poly target = mul(base, base), q, r;
    divmod(target, d, q, r);
    if (r.empty())
      return L;
  }
  return std::nullopt;
}

std::string poly_to_string(const std::vector<std::int64_t>& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::int64_t c = p[i];
    if (c == 0)
      continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (i == 0 || mag != 1)
      out << mag;
    if (i >= 1)
      out << "x";
    if (i >= 2)
      out << "^" << i;
    first = false;
  }
  if (first)
    out << "0";
  return out.str();
}

std::string to_string(const RationalGF& gf) {
  return "(" + poly_to_string(gf.numerator) + ") / (" + poly_to_string(gf.denominator) + ")";
}

std::string to_string(const RecurrenceSpec& rec) {
  std::ostringstream out;
  out << "a(n) =";
  bool first = true;
  for (int i = 1; i <= rec.order; ++i) {
    const Rational& c = rec.coefficients[static_cast<std::size_t>(i - 1)];
    if (c.is_zero())
      continue;
    Rational mag = c.sign() < 0 ? -c : c;
    out << (first ? (c.sign() < 0 ? " -" : " ") : (c.sign() < 0 ? " - " : " + "));
    if (mag != Rational(1))
      out << mag << "*";
    out << "a(n-" << i << ")";
    first = false;
  }
  if (first)
    out << " 0";
  out << " for n >= " << rec.threshold << " (order " << rec.order << ")";
  return out.str();
}

std::string to_json(const RationalGF& gf) {
  nlohmann::ordered_json j;
  j["numerator"] = gf.numerator;
  j["denominator"] = gf.denominator;
  return j.dump();
}

std::string to_json(const RecurrenceSpec& rec) {
  nlohmann::ordered_json j;
  j["order"] = rec.order;
  std::vector<std::string> cs;
  for (const auto& c : rec.coefficients)
    cs.push_back(c.to_string());
  j["coefficients"] = cs;
  j["threshold"] = rec.threshold;
  j["seeds"] = rec.seeds;
  return j.dump();
}

}  // namespace tilecs
