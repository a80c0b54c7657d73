#pragma once

#include <optional>
#include <string>

#include "hecke/arith/mat2.hpp"

namespace hecke {

/// p-adic valuation; the valuation of zero is a distinguished +infinity marker.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long v) { return Valuation(v); }

  bool is_infinite() const { return !v_.has_value(); }
  /// Throws when infinite.
  long value() const;
  std::string str() const { return is_infinite() ? "inf" : std::to_string(*v_); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  /// Integer compared against a possibly infinite valuation.
  bool at_least(long bound) const { return is_infinite() || *v_ >= bound; }

 private:
  Valuation() = default;
  explicit Valuation(long v) : v_(v) {}
  std::optional<long> v_;
};

bool is_prime(long p);
/// Throws NotPrime.
Valuation val_p(const Rat& x, long p);
Valuation val_p(const Int& x, long p);
/// Minimum valuation over the four entries.
Valuation val_p(const Mat2& m, long p);
/// True when every prime factor of the denominator is p (x in Z[1/p]).
bool in_z_1_over_p(const Rat& x, long p);
/// True when x = ±p^k for some integer k.
bool is_signed_p_power(const Rat& x, long p);
bool is_squarefree(long n);

}  // namespace hecke
