#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hecke/arith/mat2.hpp"

namespace hecke {

/// Z / sZ with s >= 1.
class ResidueRing {
 public:
  /// Moduli are limited to 16 bits so residue matrices pack into one word.
  static constexpr long kMaxModulus = 65535;

  explicit ResidueRing(long s);

  long modulus() const { return s_; }
  long reduce(long x) const { long r = x % s_; return r < 0 ? r + s_ : r; }
  long reduce(const Int& x) const;
  long add(long x, long y) const { return reduce(x + y); }
  long mul(long x, long y) const { return reduce(x * y); }

 private:
  long s_;
};

/// 2x2 matrix over Z/sZ, entries in [0, s), row-major.
struct ModMat {
  std::array<long, 4> e{};

  static ModMat identity(const ResidueRing& r) { return ModMat{{r.reduce(1), 0, 0, r.reduce(1)}}; }
  /// Reduction of an integral matrix; throws when an entry is not an integer.
  static ModMat from(const Mat2& m, const ResidueRing& r);

  std::uint64_t key() const;
  static ModMat from_key(std::uint64_t k);
  /// Lift with entries in [0, s).
  Mat2 lift() const { return {e[0], e[1], e[2], e[3]}; }
  std::string str() const;

  friend bool operator==(const ModMat&, const ModMat&) = default;
};

ModMat mul(const ModMat& x, const ModMat& y, const ResidueRing& r);
long det(const ModMat& x, const ResidueRing& r);
/// Matrix times column vector mod s.
std::array<long, 2> apply(const ModMat& m, const std::array<long, 2>& v, const ResidueRing& r);

}  // namespace hecke
