#include "hecke/arith/mat2.hpp"

#include "hecke/error.hpp"

namespace hecke {

std::string Vec2::str() const { return "[" + x.str() + "," + y.str() + "]"; }

Mat2 Mat2::inverse() const {
  Rat det_value = det();
  if (det_value.is_zero()) throw SingularBasis("matrix " + str() + " is singular");
  Rat inv = det_value.inverse();
  return {inv * d, -inv * b, -inv * c, inv * a};
}

bool Mat2::is_integral() const {
  return a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer();
}

Int Mat2::denominator_lcm() const {
  return lcm(lcm(a.den(), b.den()), lcm(c.den(), d.den()));
}

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

}  // namespace hecke
