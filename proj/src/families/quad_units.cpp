#include "hecke/families/quad_units.hpp"

#include <algorithm>
#include <set>

#include "hecke/error.hpp"

namespace hecke {

QuadInt fundamental_unit(long d) {
  if (d <= 1) throw BadDiscriminant("d = " + std::to_string(d) + " must exceed 1");
  QuadInt::check_discriminant(d);

  Int root;
  mpz_sqrt(root.get_mpz_t(), Int(d).get_mpz_t());
  // Continued fraction of sqrt(d): a_k = floor((root + m_k) / den_k).
  Int m = 0, den = 1, a = root;
  Int p_prev = 1, p = a, q_prev = 0, q = 1;
  for (;;) {
    Int norm = p * p - Int(d) * q * q;
    if (norm == 1 || norm == -1) return QuadInt::make(p, q, d);
    m = den * a - m;
    den = (Int(d) - m * m) / den;
    a = (root + m) / den;
    Int p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
}

unsigned long unit_order_mod(const QuadInt& r0, long s) {
  if (s < 2) throw Error("modulus must be at least 2");
  const QuadInt one{1, 0, r0.d};
  QuadInt base = reduce_mod(r0, s);
  QuadInt cur = base;
  const unsigned long limit = static_cast<unsigned long>(s) * static_cast<unsigned long>(s);
  for (unsigned long k = 1; k <= limit; ++k) {
    if (cur == one) return k;
    cur = reduce_mod(cur * base, s);
  }
  throw Error(r0.str() + " is not a unit modulo " + std::to_string(s));
}

bool QuadUnitData::in_image(const ResiduePair& x) const {
  return std::binary_search(unit_image.begin(), unit_image.end(), x);
}

std::optional<ResiduePair> QuadUnitData::witness() const {
  for (const auto& u : full_units)
    if (!in_image(u)) return u;
  return std::nullopt;
}

QuadUnitData unit_image_gap(long d, long s) {
  QuadUnitData data;
  data.d = d;
  data.r0 = fundamental_unit(d);
  data.s = s;
  data.n_s = unit_order_mod(data.r0, s);

  // A residue is a unit exactly when its norm is a unit mod s.
  for (long m = 0; m < s; ++m)
    for (long n = 0; n < s; ++n) {
      Int norm = mod(Int(m) * m - Int(d) * n * n, Int(s));
      if (gcd(norm, Int(s)) == 1) data.full_units.emplace_back(m, n);
    }

  std::set<ResiduePair> image;
  QuadInt cur{1, 0, d};
  const QuadInt base = reduce_mod(data.r0, s);
  for (unsigned long k = 0; k < data.n_s; ++k) {
    image.emplace(to_long(cur.m), to_long(cur.n));
    QuadInt neg = reduce_mod(QuadInt{-cur.m, -cur.n, d}, s);
    image.emplace(to_long(neg.m), to_long(neg.n));
    cur = reduce_mod(cur * base, s);
  }
  data.unit_image.assign(image.begin(), image.end());
  return data;
}

}  // namespace hecke
