#include "hecke/arith/residue.hpp"

#include "hecke/error.hpp"

namespace hecke {

ResidueRing::ResidueRing(long s) : s_(s) {
  if (s < 1) throw Error("modulus must be positive, got " + std::to_string(s));
  if (s > kMaxModulus) throw SizeCap("modulus " + std::to_string(s) + " exceeds 16-bit residue packing");
}

long ResidueRing::reduce(const Int& x) const { return to_long(mod(x, Int(s_))); }

ModMat ModMat::from(const Mat2& m, const ResidueRing& r) {
  if (!m.is_integral()) throw Error("cannot reduce non-integral matrix " + m.str());
  return ModMat{{r.reduce(m.a.num()), r.reduce(m.b.num()), r.reduce(m.c.num()), r.reduce(m.d.num())}};
}

std::uint64_t ModMat::key() const {
  return (static_cast<std::uint64_t>(e[0]) << 48) | (static_cast<std::uint64_t>(e[1]) << 32) |
         (static_cast<std::uint64_t>(e[2]) << 16) | static_cast<std::uint64_t>(e[3]);
}

ModMat ModMat::from_key(std::uint64_t k) {
  return ModMat{{static_cast<long>((k >> 48) & 0xffff), static_cast<long>((k >> 32) & 0xffff),
                 static_cast<long>((k >> 16) & 0xffff), static_cast<long>(k & 0xffff)}};
}

std::string ModMat::str() const {
  return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) +
         "," + std::to_string(e[3]) + "]]";
}

ModMat mul(const ModMat& x, const ModMat& y, const ResidueRing& r) {
  return ModMat{{r.reduce(x.e[0] * y.e[0] + x.e[1] * y.e[2]), r.reduce(x.e[0] * y.e[1] + x.e[1] * y.e[3]),
                 r.reduce(x.e[2] * y.e[0] + x.e[3] * y.e[2]), r.reduce(x.e[2] * y.e[1] + x.e[3] * y.e[3])}};
}

long det(const ModMat& x, const ResidueRing& r) { return r.reduce(x.e[0] * x.e[3] - x.e[1] * x.e[2]); }

std::array<long, 2> apply(const ModMat& m, const std::array<long, 2>& v, const ResidueRing& r) {
  return {r.reduce(m.e[0] * v[0] + m.e[1] * v[1]), r.reduce(m.e[2] * v[0] + m.e[3] * v[1])};
}

}  // namespace hecke
