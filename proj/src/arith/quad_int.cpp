#include "hecke/arith/quad_int.hpp"

#include "hecke/arith/valuation.hpp"
#include "hecke/error.hpp"

namespace hecke {

void QuadInt::check_discriminant(long d) {
  if (!is_squarefree(d) || d == 1)
    throw BadDiscriminant("d = " + std::to_string(d) + " is not a square-free non-unit");
  if (((d % 4) + 4) % 4 == 1)
    throw BadDiscriminant("d = " + std::to_string(d) +
                          " is 1 mod 4; the maximal order is Z[(1+sqrt d)/2], not Z[sqrt d]");
}

QuadInt QuadInt::make(const Int& m, const Int& n, long d) {
  check_discriminant(d);
  return QuadInt{m, n, d};
}

std::string QuadInt::str() const {
  if (n == 0) return m.get_str();
  std::string s = m == 0 ? "" : m.get_str();
  if (n < 0)
    s += "-";
  else if (m != 0)
    s += "+";
  Int an = abs(n);
  if (an != 1) s += an.get_str() + "*";
  return s + "sqrt(" + std::to_string(d) + ")";
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  if (x.d != y.d) throw Error("mixing Z[sqrt d] rings with different d");
  return QuadInt{x.m * y.m + Int(x.d) * x.n * y.n, x.m * y.n + x.n * y.m, x.d};
}

QuadInt reduce_mod(const QuadInt& x, long s) {
  return QuadInt{mod(x.m, Int(s)), mod(x.n, Int(s)), x.d};
}

QuadInt quad_pow_mod(const QuadInt& r, unsigned long k, long s) {
  if (s < 2) throw Error("modulus must be at least 2");
  QuadInt result{1, 0, r.d};
  QuadInt base = reduce_mod(r, s);
  while (k > 0) {
    if (k & 1UL) result = reduce_mod(result * base, s);
    base = reduce_mod(base * base, s);
    k >>= 1;
  }
  return reduce_mod(result, s);
}

}  // namespace hecke
