#pragma once

#include <cstdint>
#include <string>

#include "hecke/group/descriptor.hpp"

namespace hecke {

/// g = n q in G = N x| Q, with N written additively.
struct GElem {
  Vec2 n;
  Mat2 q = Mat2::identity();
  std::uint64_t owner = 0;  ///< id of the descriptor the element belongs to

  friend bool operator==(const GElem& x, const GElem& y) {
    return x.owner == y.owner && x.n == y.n && x.q == y.q;
  }
};

/// Validated element; throws NotInN / NotInQ.
GElem make_elem(const PairDescriptor& desc, const Vec2& n, const Mat2& q);
GElem identity(const PairDescriptor& desc);
GElem pure_n(const PairDescriptor& desc, const Vec2& n);
GElem pure_q(const PairDescriptor& desc, const Mat2& q);

/// (n1, q1)(n2, q2) = (n1 + q1 n2, q1 q2); throws DescriptorMismatch.
GElem mul(const PairDescriptor& desc, const GElem& x, const GElem& y);
/// Throws NotInQ when the inverse leaves Q.
GElem inv(const PairDescriptor& desc, const GElem& x);
bool in_H(const PairDescriptor& desc, const GElem& x);

/// Human-readable "(n; q)".
std::string to_string(const GElem& x);

}  // namespace hecke
