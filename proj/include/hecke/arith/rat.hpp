#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hecke {

using Int = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT: implicit from integers is intended
  Rat(const Int& v) : v_(v) {}  // NOLINT
  Rat(long num, long den);
  Rat(const Int& num, const Int& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n" or "n/d" (optional sign, surrounding whitespace ignored).
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const { return Rat(::abs(v_)); }
  Rat inverse() const;
  Int floor() const;
  /// x - floor(x), always in [0, 1).
  Rat frac() const;

  /// "num/den", with "/den" omitted when den = 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
/// Floor division for integers, b > 0.
Int floor_div(const Int& a, const Int& b);
/// Non-negative remainder, b > 0.
Int mod(const Int& a, const Int& b);
long to_long(const Int& v);

}  // namespace hecke
