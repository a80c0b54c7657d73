#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/arith/residue.hpp"
#include "hecke/group/descriptor.hpp"

namespace hecke {

/// The finite group R / R(s), R(s) = {r in R : r = I mod s}, realized as the
/// closure of the reduced R generators inside 2x2 matrices over Z/sZ.
class ResidueGroup {
 public:
  /// Throws ConductorOverflow when the group would exceed `cap` elements.
  static ResidueGroup enumerate(const PairDescriptor& desc, long s, std::size_t cap);

  long level() const { return ring_.modulus(); }
  const ResidueRing& ring() const { return ring_; }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::uint64_t key) const;
  /// Reduced generators and their inverses.
  const std::vector<ModMat>& generators() const { return gens_; }
  const std::vector<ModMat>& generator_inverses() const { return gen_invs_; }

  ModMat mul(const ModMat& x, const ModMat& y) const { return hecke::mul(x, y, ring_); }
  ModMat inverse(const ModMat& x) const;

 private:
  explicit ResidueGroup(long s) : ring_(s) {}

  ResidueRing ring_;
  std::vector<std::uint64_t> elements_;
  std::vector<ModMat> gens_;
  std::vector<ModMat> gen_invs_;
};

/// A subset of R / R(s), stored as a sorted list of packed residue matrices.
struct ResidueSubgroup {
  long level = 1;
  std::vector<std::uint64_t> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint64_t key) const;
  bool contains(const ModMat& m) const { return contains(m.key()); }
};

/// Elements of `group` accepted by `member`, which is evaluated on lifts.
ResidueSubgroup select(const ResidueGroup& group, const std::function<bool(const ModMat&)>& member);

/// Certificate that a subset is a subgroup: a generating set whose closure is exactly the subset.
struct SubgroupCertificate {
  bool is_subgroup = false;
  std::vector<ModMat> generators;
  std::string failure;
};
SubgroupCertificate certify_subgroup(const ResidueGroup& group, const ResidueSubgroup& sub);

/// Whether every generator of the ambient group conjugates the (certified) subgroup into itself.
bool is_normal(const ResidueGroup& group, const ResidueSubgroup& sub, const SubgroupCertificate& cert);

/// Image of the subset under reduction to a coarser level (coarse must divide the level).
ResidueSubgroup reduce_level(const ResidueSubgroup& sub, long coarse);

/// Left-coset labelling of a normal subgroup; labels start at 0 for the subgroup itself.
struct CosetTable {
  std::vector<std::uint64_t> reps;                       ///< one residue per label
  std::unordered_map<std::uint64_t, std::size_t> label;  ///< every element of the ambient group
};
CosetTable coset_table(const ResidueGroup& group, const ResidueSubgroup& sub);

}  // namespace hecke
