#include "hecke/cosets/double_coset.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hecke/error.hpp"

namespace hecke {

CosetEnumerator::CosetEnumerator(const PairDescriptor& desc, Bounds bounds, bool use_cache)
    : desc_(desc), bounds_(bounds), use_cache_(use_cache) {}

std::string CosetEnumerator::left_key(const GElem& y) const {
  // y H = (n + q M, q R) and q R is determined by q M because R = Q ∩ GL(2,Z).
  const Lattice qm = transform_lattice(y.q, desc_.M());
  return qm.str() + "|" + qm.reduce(y.n).str();
}

GElem CosetEnumerator::left_normal_form(const GElem& y) const {
  const Lattice qm = transform_lattice(y.q, desc_.M());
  return GElem{qm.reduce(y.n), y.q, y.owner};
}

std::shared_ptr<const DoubleCoset> CosetEnumerator::enumerate(const GElem& x) const {
  std::vector<GElem> h_gens;
  for (const auto& m : desc_.m_generators()) h_gens.push_back(GElem{m, Mat2::identity(), desc_.id()});
  for (const auto& r : desc_.r_generators_symmetric()) h_gens.push_back(GElem{Vec2{0, 0}, r, desc_.id()});

  std::map<std::string, GElem> seen;
  const GElem start = left_normal_form(x);
  seen.emplace(left_key(start), start);
  std::deque<GElem> queue{start};
  while (!queue.empty()) {
    GElem cur = queue.front();
    queue.pop_front();
    for (const auto& h : h_gens) {
      GElem next = left_normal_form(mul(desc_, h, cur));
      std::string key = left_key(next);
      if (seen.count(key)) continue;
      if (seen.size() >= bounds_.coset_enum_max)
        throw EnumerationBound("H x H / H exceeds " + std::to_string(bounds_.coset_enum_max) +
                               " left cosets for x = " + to_string(x));
      seen.emplace(std::move(key), next);
      queue.push_back(std::move(next));
    }
  }

  auto dc = std::make_shared<DoubleCoset>();
  dc->left_reps.reserve(seen.size());
  dc->left_keys.reserve(seen.size());
  for (auto& [key, rep] : seen) {
    dc->left_keys.push_back(key);
    dc->left_reps.push_back(rep);
  }
  dc->key = dc->left_keys.front();
  dc->rep = dc->left_reps.front();
  return dc;
}

std::shared_ptr<const DoubleCoset> CosetEnumerator::double_coset(const GElem& x) {
  if (x.owner != desc_.id())
    throw DescriptorMismatch("element " + to_string(x) + " does not belong to " + desc_.name());
  if (!use_cache_) return enumerate(x);
  const std::string key = left_key(x);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  auto dc = enumerate(x);
  for (const auto& k : dc->left_keys) cache_.emplace(k, dc);
  return dc;
}

Rat CosetEnumerator::delta(const GElem& x) {
  auto forward = double_coset(x)->L();
  auto backward = double_coset(inv(desc_, x))->L();
  return Rat(static_cast<long>(forward), static_cast<long>(backward));
}

}  // namespace hecke
