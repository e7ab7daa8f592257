#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tilecs/rational.hpp"

namespace tilecs {

// Exact element a + b*sqrt(3) of the field Q(sqrt 3).
//
// All catalog coordinates and all crystallographic isometries used here have
// entries in this field (cos and sin of multiples of 30 degrees live in it),
// so equality is exact and component-wise.
class QuadExt {
public:
  constexpr QuadExt() = default;
  QuadExt(Rational a) : a_(a) {}  // NOLINT: rationals embed in the field
  QuadExt(std::int64_t a) : a_(a) {}  // NOLINT
  QuadExt(Rational a, Rational b) : a_(a), b_(b) {}

  static QuadExt sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // Exact sign of the real number a + b*sqrt(3).
  int sign() const;

  QuadExt operator-() const { return {-a_, -b_}; }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }

  // Accepts sums of terms "q" and "q*r3" / "r3" with rational q, e.g.
  // "1/2+-3/4*r3", "1-r3", "-1/12*r3".
  static QuadExt parse(std::string_view text);
  // Canonical form: "1/2", "r3", "1/4-1/12*r3", ...
  std::string to_string() const;

  // Decimal expansion with exactly `digits` fractional digits, rounded
  // half-to-even. Exact: no floating point is involved.
  std::string to_decimal(int digits) const;

  double to_double() const;

  std::size_t hash() const;

private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

using Vec2 = std::array<QuadExt, 2>;

inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {u[0] + v[0], u[1] + v[1]}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {u[0] - v[0], u[1] - v[1]}; }
inline Vec2 operator*(const QuadExt& s, const Vec2& v) { return {s * v[0], s * v[1]}; }

}  // namespace tilecs

template <>
struct std::hash<tilecs::QuadExt> {
  std::size_t operator()(const tilecs::QuadExt& q) const noexcept { return q.hash(); }
};
