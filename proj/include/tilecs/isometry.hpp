#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "tilecs/quad_ext.hpp"

namespace tilecs {

// x -> linear * x + translation, with entries in Q(sqrt 3).
class ExactIsometry {
public:
  using Matrix = std::array<std::array<QuadExt, 2>, 2>;

  ExactIsometry();  // identity
  // Throws InvalidArgument unless linear is orthogonal.
  ExactIsometry(const Matrix& linear, const Vec2& translation);

  static ExactIsometry identity() { return {}; }
  // Rotation by steps * 30 degrees about the origin.
  static ExactIsometry rotation(int steps);
  static ExactIsometry translation(const Vec2& t);
  // (x, y) -> (x, -y)
  static ExactIsometry flip();
  // Rotation by steps * 30 degrees, preceded by flip() when flipped, then translation by t.
  static ExactIsometry make(int steps, bool flipped, const Vec2& t);

  const Matrix& linear() const { return linear_; }
  const Vec2& translation_part() const { return t_; }
  int orientation() const;  // determinant, +1 or -1

  Vec2 apply(const Vec2& p) const;
  ExactIsometry inverse() const;

  friend bool operator==(const ExactIsometry&, const ExactIsometry&) = default;

  std::size_t hash() const;
  std::string to_string() const;

  // Products of orthogonal matrices need no re-check.
  struct Unchecked {};
  ExactIsometry(const Matrix& linear, const Vec2& translation, Unchecked) : linear_(linear), t_(translation) {}

private:
  Matrix linear_;
  Vec2 t_;
};

// compose(f, g) = f o g, i.e. x -> f(g(x)).
ExactIsometry compose(const ExactIsometry& f, const ExactIsometry& g);

// cos and sin of steps * 30 degrees.
QuadExt cos30(int steps);
QuadExt sin30(int steps);

}  // namespace tilecs

template <>
struct std::hash<tilecs::ExactIsometry> {
  std::size_t operator()(const tilecs::ExactIsometry& f) const noexcept { return f.hash(); }
};
