#include "tilecs/quad_ext.hpp"

#include <gmpxx.h>

#include <cmath>
#include <ostream>

#include "tilecs/error.hpp"

namespace tilecs {

namespace {

mpz_class big(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_class(static_cast<long>(v));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

// Parses one unsigned term: "q", "q*r3", "r3".
QuadExt parse_term(std::string_view t) {
  t = trim(t);
  if (t.empty())
    fail_parse("empty term in quadratic number");
  constexpr std::string_view root = "r3";
  if (t.size() >= root.size() && t.substr(t.size() - root.size()) == root) {
    std::string_view coeff = t.substr(0, t.size() - root.size());
    coeff = trim(coeff);
    if (coeff.empty())
      return QuadExt::sqrt3();
    if (coeff.back() != '*')
      fail_parse("expected '*' before r3 in '" + std::string(t) + "'");
    coeff.remove_suffix(1);
    coeff = trim(coeff);
    if (coeff == "-")
      return -QuadExt::sqrt3();
    return QuadExt(Rational(0), Rational::parse(coeff));
  }
  return QuadExt(Rational::parse(t));
}

}  // namespace

int QuadExt::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // Opposite signs: compare a^2 with 3 b^2.
  mpz_class lhs = big(a_.num()) * big(a_.num()) * big(b_.den()) * big(b_.den());
  mpz_class rhs = 3 * big(b_.num()) * big(b_.num()) * big(a_.den()) * big(a_.den());
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational a = a_ * o.a_ + Rational(3) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational norm = o.a_ * o.a_ - Rational(3) * o.b_ * o.b_;
  if (norm.is_zero())
    throw InvalidArgument("division by zero in Q(sqrt 3)");
  *this *= QuadExt(o.a_ / norm, -o.b_ / norm);
  return *this;
}

QuadExt QuadExt::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty())
    fail_parse("empty quadratic number");
  QuadExt total;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    // Leading signs; "+-" is accepted so that "a+b*r3" with negative b parses.
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == ' ')) {
      if (s[pos] == '-')
        sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && !(s[end] == '-' && end > pos && s[end - 1] != '/' &&
                                                  s[end - 1] != '*'))
      ++end;
    if (end == pos)
      fail_parse("malformed quadratic number '" + std::string(text) + "'");
    QuadExt term = parse_term(s.substr(pos, end - pos));
    total += sign > 0 ? term : -term;
    any = true;
    pos = end;
  }
  if (!any)
    fail_parse("malformed quadratic number '" + std::string(text) + "'");
  return total;
}

std::string QuadExt::to_string() const {
  auto root_term = [](const Rational& b) {
    if (b == Rational(1))
      return std::string("r3");
    return b.to_string() + "*r3";
  };
  if (b_.is_zero())
    return a_.to_string();
  if (a_.is_zero())
    return b_ == Rational(-1) ? std::string("-r3") : root_term(b_);
  if (b_.sign() < 0)
    return a_.to_string() + "-" + root_term(-b_);
  return a_.to_string() + "+" + root_term(b_);
}

std::string QuadExt::to_decimal(int digits) const {
  if (digits < 0)
    throw InvalidArgument("negative digit count");
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i)
    scale *= 10;
  // x = (A + B sqrt3) / D with integers A, B and D > 0.
  mpz_class D = big(a_.den()) * big(b_.den());
  mpz_class A = big(a_.num()) * big(b_.den()) * scale;
  mpz_class B = big(b_.num()) * big(a_.den()) * scale;
  mpz_class rounded;
  if (B == 0) {
    // Rational: round A / D half to even.
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), A.get_mpz_t(), D.get_mpz_t());
    int c = cmp(2 * r, D);
    rounded = q;
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
      rounded += 1;
  } else {
    // Irrational, so no ties: round(x) = floor(x + 1/2) = floor((2A + 2B sqrt3 + D) / 2D).
    // floor(2B sqrt3) is exact via integer square root of 12 B^2.
    mpz_class s;
    mpz_class sq = 12 * B * B;
    mpz_sqrt(s.get_mpz_t(), sq.get_mpz_t());
    mpz_class fl = B > 0 ? s : mpz_class(-s - 1);  // sqrt(12 B^2) is never an integer
    mpz_class num = 2 * A + fl + D;
    mpz_class den = 2 * D;
    mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  bool neg = rounded < 0;
  mpz_class mag = neg ? mpz_class(-rounded) : rounded;
  std::string digits_str = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(digits_str.size()) <= digits)
      digits_str.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(digits_str.size())), '0');
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + digits_str;
}

double QuadExt::to_double() const {
  auto d = [](const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); };
  return d(a_) + d(b_) * std::sqrt(3.0);
}

std::size_t QuadExt::hash() const {
  std::size_t h = a_.hash();
  return h ^ (b_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace tilecs
