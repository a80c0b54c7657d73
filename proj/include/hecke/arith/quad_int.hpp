#pragma once

#include <string>

#include "hecke/arith/mat2.hpp"

namespace hecke {

/// m + n*sqrt(d) in Z[sqrt(d)], d square-free and d != 1 mod 4.
struct QuadInt {
  Int m, n;
  long d = 2;

  /// Throws BadDiscriminant when d is not square-free or d = 1 mod 4.
  static QuadInt make(const Int& m, const Int& n, long d);
  static void check_discriminant(long d);

  Int norm() const { return m * m - Int(d) * n * n; }
  /// Matrix of multiplication by this element on the basis (1, sqrt d): [[m, d n], [n, m]].
  Mat2 matrix() const { return {Rat(m), Rat(Int(Int(d) * n)), Rat(n), Rat(m)}; }
  std::string str() const;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

QuadInt operator*(const QuadInt& x, const QuadInt& y);
/// Both coordinates reduced into [0, s).
QuadInt reduce_mod(const QuadInt& x, long s);
/// r^k with coordinates in [0, s); s >= 2.
QuadInt quad_pow_mod(const QuadInt& r, unsigned long k, long s);

}  // namespace hecke
