#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/bounds.hpp"
#include "hecke/group/gelem.hpp"

namespace hecke {

/// H x H = ⊔ y_i H with canonical data.
struct DoubleCoset {
  /// Left representative with the least left-coset key.
  GElem rep;
  /// One representative per left coset, sorted by left-coset key.
  std::vector<GElem> left_reps;
  std::vector<std::string> left_keys;
  /// Least left-coset key; equal for any two representatives of the same double coset.
  std::string key;

  std::size_t L() const { return left_reps.size(); }
};

/// Breadth-first enumeration of double cosets H x H / H through the H generators,
/// with a memo table keyed by left coset.  Not thread safe; use one per thread.
class CosetEnumerator {
 public:
  explicit CosetEnumerator(const PairDescriptor& desc, Bounds bounds = {}, bool use_cache = true);

  const PairDescriptor& descriptor() const { return desc_; }
  const Bounds& bounds() const { return bounds_; }

  /// Serialized invariant of y H: canonical form of q M, then n reduced modulo q M.
  std::string left_key(const GElem& y) const;
  /// The representative (n mod q M, q) of y H.
  GElem left_normal_form(const GElem& y) const;

  /// Throws EnumerationBound when H x H has more left cosets than the bound.
  std::shared_ptr<const DoubleCoset> double_coset(const GElem& x);
  std::vector<GElem> left_coset_reps(const GElem& x) { return double_coset(x)->left_reps; }
  std::size_t L_of(const GElem& x) { return double_coset(x)->L(); }
  /// L(x) / L(x^{-1}).
  Rat delta(const GElem& x);
  std::string canonical_key(const GElem& x) { return double_coset(x)->key; }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::shared_ptr<const DoubleCoset> enumerate(const GElem& x) const;

  PairDescriptor desc_;
  Bounds bounds_;
  bool use_cache_;
  std::unordered_map<std::string, std::shared_ptr<const DoubleCoset>> cache_;
};

}  // namespace hecke
