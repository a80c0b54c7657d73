#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/arith/quad_int.hpp"

namespace hecke {

/// Smallest unit > 1 of Z[sqrt d], from the continued fraction of sqrt d.
/// Throws BadDiscriminant unless d > 1 is square-free with d != 1 mod 4.
QuadInt fundamental_unit(long d);

/// Multiplicative order of the unit r0 in Z_s[sqrt d], s >= 2.
unsigned long unit_order_mod(const QuadInt& r0, long s);

using ResiduePair = std::pair<long, long>;

/// Units of Z_s[sqrt d] against the image of the global units ±r0^Z.
struct QuadUnitData {
  long d = 0;
  QuadInt r0;
  long s = 0;
  unsigned long n_s = 0;
  std::vector<ResiduePair> unit_image;  ///< sorted
  std::vector<ResiduePair> full_units;  ///< sorted

  bool in_image(const ResiduePair& x) const;
  bool proper() const { return unit_image.size() < full_units.size(); }
  /// Least unit outside the image, if any.
  std::optional<ResiduePair> witness() const;
};

QuadUnitData unit_image_gap(long d, long s);

}  // namespace hecke
