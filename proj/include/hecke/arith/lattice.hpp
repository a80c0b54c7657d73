#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/arith/mat2.hpp"

namespace hecke {

/// Full-rank subgroup of Q^2, stored in column Hermite form
///
///     [[a, 0],
///      [c, d]]     a > 0, d > 0, 0 <= c < d,
///
/// with basis columns (a, c) and (0, d).  The form is unique, so two
/// lattices are equal exactly when their stored entries agree.
class Lattice {
 public:
  /// Z^2.
  Lattice() : a_(1), c_(0), d_(1) {}

  static Lattice standard() { return Lattice(); }
  /// k * Z^2, k > 0.
  static Lattice scaled(const Rat& k);
  /// Canonical form of the Z-span of the columns of a nonsingular matrix.
  static Lattice from_basis(const Mat2& basis);
  /// Canonical form of the Z-span of any generating set of a full-rank lattice.
  static Lattice from_generators(std::span<const Vec2> gens);

  const Rat& a() const { return a_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }
  Mat2 basis() const { return {a_, 0, c_, d_}; }
  Vec2 col0() const { return {a_, c_}; }
  Vec2 col1() const { return {0, d_}; }
  Rat det() const { return a_ * d_; }

  bool contains(const Vec2& v) const;
  bool contains(const Lattice& sub) const { return contains(sub.col0()) && contains(sub.col1()); }
  bool is_integral() const { return a_.is_integer() && c_.is_integer() && d_.is_integer(); }
  /// Unique representative of v + L inside [0,a) x [0,d) after the column reduction.
  Vec2 reduce(const Vec2& v) const;
  /// Dual lattice {w : <w, v> in Z for all v in L}.
  Lattice dual() const;

  /// Serialized canonical basis "[[a,0],[c,d]]".
  std::string str() const { return basis().str(); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(Rat a, Rat c, Rat d) : a_(std::move(a)), c_(std::move(c)), d_(std::move(d)) {}

  Rat a_, c_, d_;
};

/// Canonical Hermite form of the column span; throws SingularBasis.
Lattice hnf(const Mat2& raw_basis);
Lattice lattice_intersect(const Lattice& l1, const Lattice& l2);
Lattice lattice_sum(const Lattice& l1, const Lattice& l2);
/// [big : small]; throws NotSublattice unless small is contained in big.
Int lattice_index(const Lattice& big, const Lattice& small);
/// Canonical form of q * L; throws SingularBasis when det q = 0.
Lattice transform_lattice(const Mat2& q, const Lattice& l);
/// Invariant factors (d1 | d2) of Z^2 / L for L inside Z^2; throws NotSublattice.
std::pair<Int, Int> smith_invariants(const Lattice& l);
/// Least positive integer k with k * Z^2 contained in L.
Int scalar_exponent(const Lattice& l);

}  // namespace hecke
