#include "hecke/group/residue_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hecke/error.hpp"

namespace hecke {

ResidueGroup ResidueGroup::enumerate(const PairDescriptor& desc, long s, std::size_t cap) {
  ResidueGroup group(s);
  for (const auto& g : desc.r_generators_symmetric()) {
    group.gens_.push_back(ModMat::from(g, group.ring_));
    group.gen_invs_.push_back(ModMat::from(g.inverse(), group.ring_));
  }

  const ModMat id = ModMat::identity(group.ring_);
  std::unordered_set<std::uint64_t> seen{id.key()};
  std::deque<ModMat> queue{id};
  while (!queue.empty()) {
    ModMat cur = queue.front();
    queue.pop_front();
    for (const auto& g : group.gens_) {
      ModMat next = group.mul(g, cur);
      if (seen.insert(next.key()).second) {
        if (seen.size() > cap)
          throw ConductorOverflow("R/R(" + std::to_string(s) + ") has more than " +
                                  std::to_string(cap) + " elements");
        queue.push_back(next);
      }
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

bool ResidueGroup::contains(std::uint64_t key) const {
  return std::binary_search(elements_.begin(), elements_.end(), key);
}

ModMat ResidueGroup::inverse(const ModMat& x) const {
  // det is a unit mod s for every element of the group.
  long det_value = det(x, ring_);
  Int inv;
  Int dv(det_value), sv(level());
  if (level() == 1) return x;
  if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), sv.get_mpz_t()) == 0)
    throw Error("residue matrix " + x.str() + " is not invertible");
  long di = to_long(inv);
  return ModMat{{ring_.mul(di, x.e[3]), ring_.mul(di, ring_.reduce(-x.e[1])),
                 ring_.mul(di, ring_.reduce(-x.e[2])), ring_.mul(di, x.e[0])}};
}

bool ResidueSubgroup::contains(std::uint64_t key) const {
  return std::binary_search(elements.begin(), elements.end(), key);
}

ResidueSubgroup select(const ResidueGroup& group, const std::function<bool(const ModMat&)>& member) {
  ResidueSubgroup sub;
  sub.level = group.level();
  for (auto key : group.elements())
    if (member(ModMat::from_key(key))) sub.elements.push_back(key);
  return sub;
}

SubgroupCertificate certify_subgroup(const ResidueGroup& group, const ResidueSubgroup& sub) {
  SubgroupCertificate cert;
  const ModMat id = ModMat::identity(group.ring());
  if (!sub.contains(id)) {
    cert.failure = "identity missing";
    return cert;
  }
  // Dimino closure: each new generator extends the current subgroup by whole cosets.
  std::vector<ModMat> elements{id};
  std::unordered_set<std::uint64_t> closure{id.key()};
  auto add_coset = [&](const ModMat& rep, std::size_t base_size) {
    for (std::size_t i = 0; i < base_size; ++i) {
      ModMat e = group.mul(elements[i], rep);
      if (!sub.contains(e)) {
        cert.failure = "product " + e.str() + " leaves the subset";
        return false;
      }
      if (closure.insert(e.key()).second) elements.push_back(e);
    }
    return true;
  };
  for (auto key : sub.elements) {
    if (closure.count(key)) continue;
    const ModMat g = ModMat::from_key(key);
    cert.generators.push_back(g);
    const std::size_t base_size = elements.size();
    std::vector<ModMat> reps{g};
    if (!add_coset(g, base_size)) return cert;
    for (std::size_t pos = 0; pos < reps.size(); ++pos) {
      for (const auto& s : cert.generators) {
        ModMat next = group.mul(reps[pos], s);
        if (closure.count(next.key())) continue;
        reps.push_back(next);
        if (!add_coset(next, base_size)) return cert;
      }
    }
  }
  cert.is_subgroup = closure.size() == sub.size();
  if (!cert.is_subgroup) cert.failure = "closure does not exhaust the subset";
  return cert;
}

bool is_normal(const ResidueGroup& group, const ResidueSubgroup& sub, const SubgroupCertificate& cert) {
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    const auto& g = group.generators()[i];
    const auto& gi = group.generator_inverses()[i];
    for (const auto& h : cert.generators)
      if (!sub.contains(group.mul(group.mul(g, h), gi))) return false;
  }
  return true;
}

ResidueSubgroup reduce_level(const ResidueSubgroup& sub, long coarse) {
  if (coarse < 1 || sub.level % coarse != 0)
    throw NotComparable("level " + std::to_string(coarse) + " does not divide " + std::to_string(sub.level));
  ResidueRing ring(coarse);
  std::unordered_set<std::uint64_t> keys;
  for (auto key : sub.elements) {
    ModMat m = ModMat::from_key(key);
    for (auto& e : m.e) e = ring.reduce(e);
    keys.insert(m.key());
  }
  ResidueSubgroup out;
  out.level = coarse;
  out.elements.assign(keys.begin(), keys.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

CosetTable coset_table(const ResidueGroup& group, const ResidueSubgroup& sub) {
  CosetTable table;
  table.label.reserve(group.size());
  // Label the subgroup first so that label 0 is the identity coset.
  std::vector<std::uint64_t> order;
  order.reserve(group.size());
  order.push_back(ModMat::identity(group.ring()).key());
  for (auto key : group.elements()) order.push_back(key);
  for (auto key : order) {
    if (table.label.count(key)) continue;
    std::size_t label = table.reps.size();
    table.reps.push_back(key);
    ModMat g = ModMat::from_key(key);
    for (auto h : sub.elements) table.label.emplace(group.mul(g, ModMat::from_key(h)).key(), label);
  }
  return table;
}

}  // namespace hecke
