#include "hecke/arith/valuation.hpp"

#include <algorithm>

#include "hecke/error.hpp"

namespace hecke {

long Valuation::value() const {
  if (!v_) throw Error("valuation is infinite");
  return *v_;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

namespace {

long strip(Int& x, long p) {
  long v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++v;
  }
  return v;
}

void require_prime(long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

}  // namespace

Valuation val_p(const Int& x, long p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  Int y = abs(x);
  return Valuation::finite(strip(y, p));
}

Valuation val_p(const Rat& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  Int n = abs(x.num()), d = x.den();
  return Valuation::finite(strip(n, p) - strip(d, p));
}

Valuation val_p(const Mat2& m, long p) {
  Valuation best = Valuation::infinity();
  for (const Rat* e : {&m.a, &m.b, &m.c, &m.d}) {
    Valuation v = val_p(*e, p);
    if (!v.is_infinite() && (best.is_infinite() || v.value() < best.value())) best = v;
  }
  return best;
}

bool in_z_1_over_p(const Rat& x, long p) {
  Int d = x.den();
  strip(d, p);
  return d == 1;
}

bool is_signed_p_power(const Rat& x, long p) {
  if (x.is_zero()) return false;
  Int n = abs(x.num()), d = x.den();
  strip(n, p);
  strip(d, p);
  return n == 1 && d == 1;
}

bool is_squarefree(long n) {
  n = std::abs(n);
  if (n == 0) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

}  // namespace hecke
