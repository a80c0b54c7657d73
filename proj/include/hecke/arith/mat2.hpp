#pragma once

#include <string>

#include "hecke/arith/rat.hpp"

namespace hecke {

struct Vec2 {
  Rat x, y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }

  bool is_integral() const { return x.is_integer() && y.is_integer(); }
  /// "[x,y]" with rational entries.
  std::string str() const;
};

/// 2x2 rational matrix, row-major entries [[a,b],[c,d]].
struct Mat2 {
  Rat a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(const Rat& x, const Rat& y) { return {x, 0, 0, y}; }
  static Mat2 scalar(const Rat& x) { return {x, 0, 0, x}; }
  /// Matrix whose columns are u and v.
  static Mat2 from_columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }
  /// Throws SingularBasis when det = 0.
  Mat2 inverse() const;
  Mat2 transpose() const { return {a, c, b, d}; }
  Vec2 col0() const { return {a, c}; }
  Vec2 col1() const { return {b, d}; }

  bool is_integral() const;
  bool is_identity() const { return *this == identity(); }
  /// Least positive integer k with k*this integral.
  Int denominator_lcm() const;

  std::string str() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend Mat2 operator*(const Rat& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
};

}  // namespace hecke
