#pragma once

#include "hecke/arith/lattice.hpp"
#include "hecke/bounds.hpp"
#include "hecke/group/descriptor.hpp"
#include "hecke/group/residue_group.hpp"

namespace hecke {

/// A stabilizer subgroup M' x| R' of H: the lattice M' and the image of R' in R / R(s).
struct StabDescriptor {
  Lattice m_lattice;
  ResidueSubgroup r_condition;
  /// |R / R(s)| at the stored level.
  std::size_t ambient_size = 1;

  Int m_index(const Lattice& m) const { return lattice_index(m, m_lattice); }
  std::size_t r_index() const { return ambient_size / r_condition.size(); }
};

/// M ∩ q M q^{-1}.
Lattice M_q(const PairDescriptor& desc, const Mat2& q);

/// Level s with R(s) inside R_q: |det(l q)| for the least l making l q integral.
long conductor_for_q(const Mat2& q);
/// Least s with s n integral; R(s) fixes n + M.
long conductor_for_n(const Vec2& n);

/// r in R with q^{-1} r q in R.
bool in_R_q(const PairDescriptor& desc, const Mat2& r, const Mat2& q);
/// r in R with (r - I) n in M.
bool in_R_nM(const PairDescriptor& desc, const Mat2& r, const Vec2& n);

/// M_q x| R_q, with R_q cut out of R / R(s).  Falls back to doubling s when the
/// selected set fails its subgroup certificate; throws ConductorOverflow past the bound.
StabDescriptor stabilizer_q(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds);
/// M x| R_{n,M}.
StabDescriptor stabilizer_n(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds);

/// [R : R ∩ q R q^{-1}] from the residue subgroup.
Int index_R_q(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds);
/// |R q R / R| counted as the R-orbit of the lattice q M (independent of any conductor).
Int count_RqR_cosets(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds);

/// [R : R_{n,M}] as the orbit of s n in (Z/s)^2 under the generators mod s.
Int index_R_nM(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds);
/// Same index by orbit-stabilizer in R / R(s): |R/R(s)| / |Stab(n + M)|.
Int index_R_nM_by_stabilizer(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds);

}  // namespace hecke

namespace hecke {

/// r (through any lift L of its residue) lies in t R_{F,M} t^{-1} for every t in `reps`:
/// (t^{-1} L t - I) v in M for every basis vector v of F.
bool in_R_EF(const std::vector<Mat2>& reps, const Lattice& f, const Mat2& lift);

/// Least s such that the condition above depends only on r mod s.
Int conductor_for_EF(const std::vector<Mat2>& reps, const Lattice& f);

/// ⋂_{t in reps} (t R_{F,M} t^{-1} ∩ R) inside R / R(s).
struct EFSubgroup {
  ResidueGroup group;
  ResidueSubgroup sub;
  SubgroupCertificate cert;

  long level() const { return group.level(); }
  std::size_t index() const { return group.size() / sub.size(); }
};
/// The level is the conductor, made divisible by `level_multiple`; it doubles while
/// the selected set fails its subgroup certificate.  Throws ConductorOverflow.
EFSubgroup R_EF_residues(const PairDescriptor& desc, const std::vector<Mat2>& reps, const Lattice& f,
                         const Bounds& bounds, const Int& level_multiple = 1);

}  // namespace hecke
