#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/bounds.hpp"
#include "hecke/group/stabilizers.hpp"
#include "hecke/io/report.hpp"

namespace hecke {

/// E = ⊔ t R, a finite union of left cosets of R in Q with e in E and R E = E.
struct CosetFamilyE {
  std::vector<Mat2> reps;         ///< reps[0] is the identity
  std::vector<std::string> keys;  ///< canonical t M, parallel to reps

  std::size_t size() const { return reps.size(); }
  /// Whether q R is one of the listed cosets.
  bool contains(const PairDescriptor& desc, const Mat2& q) const;
};

/// F, a lattice containing M.
struct FamilyF {
  Lattice f_lattice;
};

/// Left cosets of R (seed ∪ {e}) R.  Throws EnumerationBound.
CosetFamilyE make_E(const PairDescriptor& desc, const std::vector<Mat2>& seed, const Bounds& bounds = {});
/// Family with the given coset representatives, identity prepended when missing; no closure is applied.
CosetFamilyE family_from_reps(const PairDescriptor& desc, const std::vector<Mat2>& reps);

/// Sum of the R-orbit of a lattice: the least R-stable lattice containing it.
Lattice r_saturate(const PairDescriptor& desc, const Lattice& l, const Bounds& bounds = {});
/// R-saturation of M + Σ_t t^{-1} M (+ seedF), which is M + Σ_{q in E} q^{-1} M.
FamilyF make_F(const PairDescriptor& desc, const CosetFamilyE& e, const std::optional<Lattice>& seed_f = std::nullopt,
               const Bounds& bounds = {});

/// M_E = ⋂_t (t M ∩ M).
Lattice compute_M_E(const PairDescriptor& desc, const CosetFamilyE& e);
/// R^E_F = ⋂_{q in E} (q R_{F,M} q^{-1} ∩ R) inside R / R(s).  R_{F,M} only depends on the
/// R-saturation of F, so the saturation is used and q runs over the coset representatives.
EFSubgroup compute_R_EF(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f, const Bounds& bounds = {},
                        const Int& level_multiple = 1);

/// Checks conditions (1)-(6) on (E, F); throws FamilyConditionViolated naming the first failure.
void check_family_conditions(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f,
                             const Bounds& bounds = {});

/// One finite stage (M/M_E) x| (R/R^E_F).  Elements are encoded as m * |R/R^E_F| + rho.
class TowerStage {
 public:
  /// Checks the family conditions, computes the quotients and verifies that R^E_F acts trivially
  /// on M/M_E.  Throws FamilyConditionViolated, ActionNotWellDefined, StageTooLarge.
  static TowerStage build(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f,
                          const Bounds& bounds = {}, const Int& level_multiple = 1);

  const PairDescriptor& descriptor() const { return desc_; }
  const CosetFamilyE& E() const { return e_; }
  const FamilyF& F() const { return f_; }
  const Lattice& m_e() const { return m_e_; }
  const EFSubgroup& R_EF() const { return r_ef_; }
  const CosetTable& quot_R() const { return quot_r_; }
  long level() const { return r_ef_.level(); }

  std::size_t m_order() const { return quot_m_.size(); }
  std::size_t r_order() const { return quot_r_.reps.size(); }
  std::size_t order() const { return m_order() * r_order(); }
  std::pair<Int, Int> invariant_factors() const { return smith_invariants(m_e_); }

  std::size_t encode(std::size_t m, std::size_t rho) const { return m * r_order() + rho; }
  std::size_t m_part(std::size_t x) const { return x / r_order(); }
  std::size_t r_part(std::size_t x) const { return x % r_order(); }

  /// Index of v + M_E for an integral v.
  std::size_t m_index(const Vec2& v) const;
  const Vec2& m_vector(std::size_t m) const { return quot_m_[m]; }
  /// Label of a residue matrix of R / R(s).
  std::size_t r_label(const ModMat& r) const { return quot_r_.label.at(r.key()); }
  ModMat r_rep(std::size_t rho) const { return ModMat::from_key(quot_r_.reps[rho]); }

  /// rho . m in M/M_E.
  std::size_t act(std::size_t rho, std::size_t m) const { return act_[rho * m_order() + m]; }
  std::size_t mul(std::size_t x, std::size_t y) const;
  std::size_t identity() const { return 0; }
  /// Images of the H generators.
  const std::vector<std::size_t>& generators() const { return gens_; }

 private:
  TowerStage(const PairDescriptor& desc, CosetFamilyE e, FamilyF f, Lattice m_e, EFSubgroup r_ef)
      : desc_(desc), e_(std::move(e)), f_(std::move(f)), m_e_(std::move(m_e)), r_ef_(std::move(r_ef)) {}

  PairDescriptor desc_;
  CosetFamilyE e_;
  FamilyF f_;
  Lattice m_e_;
  EFSubgroup r_ef_;
  CosetTable quot_r_;
  std::vector<Vec2> quot_m_;
  std::vector<std::size_t> act_;
  std::vector<std::size_t> gens_;
};

/// Normality of R^E_F, R-invariance of M_E, and R^E_F acting trivially on M/M_E.
Report verify_lemmas(const TowerStage& stage);
/// Gate on the family conditions, then the checks above.
Report verify_lemmas(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f, const Bounds& bounds = {});

/// (m mod M_fine, r mod R_fine) -> (m mod M_coarse, r mod R_coarse).
struct ConnectingMap {
  std::vector<std::size_t> image;  ///< image of every fine element
  bool homomorphism = false;       ///< checked on all (element, generator) pairs
  bool surjective = false;         ///< image count equals the coarse order
  std::size_t kernel_size = 0;
};
/// Throws NotComparable unless M_fine ⊆ M_coarse, the coarse level divides the fine
/// level and R_fine reduces into R_coarse.
ConnectingMap connecting_map(const TowerStage& fine, const TowerStage& coarse);

/// Compares the stage with the quotient of the image of H in (Z^2/eZ^2) x| R/R(s) by the image of
/// M_E R^E_F, built from the group law alone.  Returns nullopt when the stage exceeds `max_order`.
std::optional<bool> quotient_isomorphism_check(const TowerStage& stage, std::size_t max_order = 2000);

/// Stage 0 is E = R, F = M; stage j uses the first j seeds.  Levels are nested.
struct Tower {
  std::vector<TowerStage> stages;
  std::vector<ConnectingMap> maps;  ///< maps[j]: stage j+1 -> stage j
};
Tower build_tower(const PairDescriptor& desc, const std::vector<Mat2>& seeds, std::size_t stages,
                  const Bounds& bounds = {});

/// Lemma checks, order identity, connecting maps, triangles and quotient isomorphisms.
Report verify_tower(const Tower& tower, std::size_t triangle_exhaustive_max = 5000,
                    std::size_t quotient_check_max = 1000000);

}  // namespace hecke
