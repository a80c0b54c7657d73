#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/arith/lattice.hpp"
#include "hecke/arith/quad_int.hpp"

namespace hecke {

enum class Family { Planar, Heisenberg };
enum class QKind { FullGL2, QuadTorus, Unipotent };

std::string to_string(Family f);
std::string to_string(QKind k);

/// A concrete pair (G, H) = (N x| Q, M x| R).
///
/// Planar families: N = K^2 with K = Q or Z[1/p], M = Z^2, Q a matrix group
/// (all of GL(2,K), or the torus {[[a, d b], [b, a]]} of K(sqrt d)^x) acting
/// linearly, and R = Q ∩ GL(2,Z).
///
/// Heisenberg family: N = K/Z x K, M = {0} x Z, Q = {[[1,q],[0,1]]}, R the
/// integral unipotents.  Elements of N are carried as vectors of Q^2 modulo
/// Z x {0}; every subgroup of N that shows up is then a lattice containing
/// Z x {0}, so the planar lattice machinery applies with M lifted to Z^2.
class PairDescriptor {
 public:
  /// GL(2, K) with K = Q (p empty) or Z[1/p].
  static PairDescriptor full_gl2(std::optional<long> p = std::nullopt);
  /// Torus of Q(sqrt d)^x in its regular representation; R = {±r0^k}.
  static PairDescriptor quad_torus(long d, std::optional<long> p = std::nullopt);
  static PairDescriptor heisenberg(std::optional<long> p = std::nullopt);
  /// Validated general constructor; throws ConfigInvalid.
  static PairDescriptor make(Family family, std::optional<long> p, QKind kind, long d,
                             const Lattice& m, std::vector<Mat2> r_generators);

  Family family() const { return family_; }
  std::optional<long> prime() const { return p_; }
  QKind q_kind() const { return kind_; }
  long d() const { return d_; }
  const Lattice& M() const { return m_; }
  const std::vector<Mat2>& r_generators() const { return r_gens_; }
  /// Generators together with their inverses, duplicates removed.
  const std::vector<Mat2>& r_generators_symmetric() const { return r_gens_sym_; }
  /// Vectors generating M as a subgroup of N.
  const std::vector<Vec2>& m_generators() const { return m_gens_; }
  std::uint64_t id() const { return id_; }
  std::string name() const;

  bool in_base_ring(const Rat& x) const;
  bool in_N(const Vec2& n) const;
  bool in_Q(const Mat2& q) const;
  bool in_R(const Mat2& q) const;
  bool in_M(const Vec2& n) const { return m_.contains(n); }
  /// Canonical coordinates for an element of N (Heisenberg: first coordinate mod 1).
  Vec2 normalize_n(const Vec2& n) const;
  /// Whether the diagonal scalars of the base ring lie in Q.
  bool has_scalars() const { return kind_ != QKind::Unipotent; }

 private:
  PairDescriptor() = default;
  void finish();

  Family family_ = Family::Planar;
  std::optional<long> p_;
  QKind kind_ = QKind::FullGL2;
  long d_ = 0;
  Lattice m_;
  std::vector<Mat2> r_gens_;
  std::vector<Mat2> r_gens_sym_;
  std::vector<Vec2> m_gens_;
  std::uint64_t id_ = 0;
};

/// Default R generators: transvections and diag(1,-1); {-1, r0}; the unit translation.
std::vector<Mat2> default_r_generators(QKind kind, long d);

}  // namespace hecke
