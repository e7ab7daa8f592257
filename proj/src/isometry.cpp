#include "tilecs/isometry.hpp"

#include "tilecs/error.hpp"

namespace tilecs {

QuadExt cos30(int steps) {
  const Rational h(1, 2);
  switch (((steps % 12) + 12) % 12) {
    case 0: return 1;
    case 1: return {0, h};
    case 2: return h;
    case 3: return 0;
    case 4: return -QuadExt(h);
    case 5: return {0, -h};
    case 6: return -1;
    case 7: return {0, -h};
    case 8: return -QuadExt(h);
    case 9: return 0;
    case 10: return h;
    default: return {0, h};
  }
}

QuadExt sin30(int steps) { return cos30(steps - 3); }

ExactIsometry::ExactIsometry() : linear_{{{1, 0}, {0, 1}}}, t_{0, 0} {}

ExactIsometry::ExactIsometry(const Matrix& linear, const Vec2& translation) : linear_(linear), t_(translation) {
  const auto& m = linear_;
  QuadExt c0 = m[0][0] * m[0][0] + m[1][0] * m[1][0];
  QuadExt c1 = m[0][1] * m[0][1] + m[1][1] * m[1][1];
  QuadExt dot = m[0][0] * m[0][1] + m[1][0] * m[1][1];
  if (c0 != QuadExt(1) || c1 != QuadExt(1) || !dot.is_zero())
    throw InvalidArgument("linear part is not orthogonal");
}

ExactIsometry ExactIsometry::rotation(int steps) {
  QuadExt c = cos30(steps), s = sin30(steps);
  return ExactIsometry({{{c, -s}, {s, c}}}, {0, 0});
}

ExactIsometry ExactIsometry::translation(const Vec2& t) { return ExactIsometry({{{1, 0}, {0, 1}}}, t); }

ExactIsometry ExactIsometry::flip() { return ExactIsometry({{{1, 0}, {0, -1}}}, {0, 0}); }

ExactIsometry ExactIsometry::make(int steps, bool flipped, const Vec2& t) {
  ExactIsometry f = rotation(steps);
  if (flipped)
    f = compose(f, flip());
  return compose(translation(t), f);
}

int ExactIsometry::orientation() const {
  QuadExt det = linear_[0][0] * linear_[1][1] - linear_[0][1] * linear_[1][0];
  return det.sign();
}

Vec2 ExactIsometry::apply(const Vec2& p) const {
  return {linear_[0][0] * p[0] + linear_[0][1] * p[1] + t_[0], linear_[1][0] * p[0] + linear_[1][1] * p[1] + t_[1]};
}

ExactIsometry ExactIsometry::inverse() const {
  ExactIsometry r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.linear_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          linear_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  r.t_ = {-(r.linear_[0][0] * t_[0] + r.linear_[0][1] * t_[1]), -(r.linear_[1][0] * t_[0] + r.linear_[1][1] * t_[1])};
  return r;
}

ExactIsometry compose(const ExactIsometry& f, const ExactIsometry& g) {
  const auto& a = f.linear();
  const auto& b = g.linear();
  ExactIsometry::Matrix m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return ExactIsometry(m, f.apply(g.translation_part()), ExactIsometry::Unchecked{});
}

std::size_t ExactIsometry::hash() const {
  std::size_t h = 0;
  auto mix = [&h](const QuadExt& q) { h ^= q.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& row : linear_)
    for (const auto& x : row)
      mix(x);
  mix(t_[0]);
  mix(t_[1]);
  return h;
}

std::string ExactIsometry::to_string() const {
  const auto& m = linear_;
  return "[[" + m[0][0].to_string() + ", " + m[0][1].to_string() + "], [" + m[1][0].to_string() + ", " +
         m[1][1].to_string() + "]] + (" + t_[0].to_string() + ", " + t_[1].to_string() + ")";
}

}  // namespace tilecs
