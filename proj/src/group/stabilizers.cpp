#include "hecke/group/stabilizers.hpp"

#include <array>
#include <deque>
#include <set>
#include <unordered_set>

#include "hecke/error.hpp"

namespace hecke {

namespace {

long checked_level(const Int& s, const Bounds& bounds) {
  if (s > bounds.conductor_max || s > ResidueRing::kMaxModulus)
    throw ConductorOverflow("conductor " + s.get_str() + " exceeds bound " +
                            std::to_string(bounds.conductor_max));
  return to_long(s);
}

std::array<long, 2> residue_vector(const Vec2& n, long s, const ResidueRing& ring) {
  return {ring.reduce((n.x * Rat(s)).num()), ring.reduce((n.y * Rat(s)).num())};
}

}  // namespace

Lattice M_q(const PairDescriptor& desc, const Mat2& q) {
  return lattice_intersect(desc.M(), transform_lattice(q, desc.M()));
}

long conductor_for_q(const Mat2& q) {
  Rat l(q.denominator_lcm());
  Int det = (l * q).det().num();
  if (det < 0) det = -det;
  if (!det.fits_slong_p()) throw ConductorOverflow("conductor " + det.get_str() + " does not fit");
  return det.get_si();
}

long conductor_for_n(const Vec2& n) {
  Int s = lcm(n.x.den(), n.y.den());
  if (!s.fits_slong_p()) throw ConductorOverflow("conductor " + s.get_str() + " does not fit");
  return s.get_si();
}

bool in_R_q(const PairDescriptor& desc, const Mat2& r, const Mat2& q) {
  return desc.in_R(r) && desc.in_R(q.inverse() * r * q);
}

bool in_R_nM(const PairDescriptor& desc, const Mat2& r, const Vec2& n) {
  return desc.in_R(r) && desc.in_M(r * n - n);
}

StabDescriptor stabilizer_q(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds) {
  const Mat2 q_inv = q.inverse();
  Int s = conductor_for_q(q);
  for (;;) {
    long level = checked_level(s, bounds);
    auto group = ResidueGroup::enumerate(desc, level, bounds.residue_group_max);
    // Integrality of q^{-1} L q depends only on L mod s at a valid conductor.
    auto sub = select(group, [&](const ModMat& m) { return (q_inv * m.lift() * q).is_integral(); });
    auto cert = certify_subgroup(group, sub);
    if (cert.is_subgroup && group.size() % sub.size() == 0)
      return StabDescriptor{M_q(desc, q), std::move(sub), group.size()};
    s *= 2;
  }
}

StabDescriptor stabilizer_n(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds) {
  long level = checked_level(conductor_for_n(n), bounds);
  auto group = ResidueGroup::enumerate(desc, level, bounds.residue_group_max);
  const auto v = residue_vector(n, level, group.ring());
  auto sub = select(group, [&](const ModMat& m) { return apply(m, v, group.ring()) == v; });
  return StabDescriptor{desc.M(), std::move(sub), group.size()};
}

Int index_R_q(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds) {
  return Int(static_cast<unsigned long>(stabilizer_q(desc, q, bounds).r_index()));
}

Int count_RqR_cosets(const PairDescriptor& desc, const Mat2& q, const Bounds& bounds) {
  const Lattice start = transform_lattice(q, desc.M());
  std::set<std::string> seen{start.str()};
  std::deque<Lattice> queue{start};
  while (!queue.empty()) {
    Lattice cur = queue.front();
    queue.pop_front();
    for (const auto& r : desc.r_generators_symmetric()) {
      Lattice next = transform_lattice(r, cur);
      if (seen.insert(next.str()).second) {
        if (seen.size() > bounds.coset_enum_max)
          throw EnumerationBound("R q R / R exceeds " + std::to_string(bounds.coset_enum_max) + " cosets");
        queue.push_back(next);
      }
    }
  }
  return Int(static_cast<unsigned long>(seen.size()));
}

Int index_R_nM(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds) {
  long level = checked_level(conductor_for_n(n), bounds);
  ResidueRing ring(level);
  std::vector<ModMat> gens;
  for (const auto& g : desc.r_generators_symmetric()) gens.push_back(ModMat::from(g, ring));

  const auto start = residue_vector(n, level, ring);
  auto pack = [level](const std::array<long, 2>& v) { return v[0] * level + v[1]; };
  std::unordered_set<long> seen{pack(start)};
  std::deque<std::array<long, 2>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = apply(g, cur, ring);
      if (seen.insert(pack(next)).second) queue.push_back(next);
    }
  }
  return Int(static_cast<unsigned long>(seen.size()));
}

Int index_R_nM_by_stabilizer(const PairDescriptor& desc, const Vec2& n, const Bounds& bounds) {
  auto stab = stabilizer_n(desc, n, bounds);
  return Int(static_cast<unsigned long>(stab.r_index()));
}

}  // namespace hecke

namespace hecke {

bool in_R_EF(const std::vector<Mat2>& reps, const Lattice& f, const Mat2& lift) {
  for (const auto& t : reps) {
    const Mat2 conj = t.inverse() * lift * t - Mat2::identity();
    if (!(conj * f.col0()).is_integral() || !(conj * f.col1()).is_integral()) return false;
  }
  return true;
}

Int conductor_for_EF(const std::vector<Mat2>& reps, const Lattice& f) {
  Int s = 1;
  for (const auto& t : reps) {
    const Mat2 ti = t.inverse();
    const Rat ti_entries[4] = {ti.a, ti.b, ti.c, ti.d};
    for (const Vec2& v : {f.col0(), f.col1()}) {
      const Vec2 tv = t * v;
      for (const auto& e : ti_entries)
        for (const Rat& w : {tv.x, tv.y}) s = lcm(s, (e * w).den());
    }
  }
  return s;
}

EFSubgroup R_EF_residues(const PairDescriptor& desc, const std::vector<Mat2>& reps, const Lattice& f,
                         const Bounds& bounds, const Int& level_multiple) {
  Int s = lcm(conductor_for_EF(reps, f), level_multiple);
  for (;;) {
    long level = checked_level(s, bounds);
    auto group = ResidueGroup::enumerate(desc, level, bounds.residue_group_max);
    // The condition is linear in the entries of r: each (t, v, row) gives
    // Σ s (t^{-1})_{ki} (t v)_j r_{ij} = s v_k (mod s) with integer coefficients.
    struct Form {
      std::array<long, 4> coef;
      long rhs;
    };
    const ResidueRing& ring = group.ring();
    const Rat sr(level);
    std::vector<Form> forms;
    for (const auto& t : reps) {
      const Mat2 ti = t.inverse();
      const Rat rows[2][2] = {{ti.a, ti.b}, {ti.c, ti.d}};
      for (const Vec2& v : {f.col0(), f.col1()}) {
        const Vec2 tv = t * v;
        const Rat w[2] = {tv.x, tv.y};
        const Rat vk[2] = {v.x, v.y};
        for (int k = 0; k < 2; ++k) {
          Form form{};
          auto integral = [&](const Rat& x) {
            if (!x.is_integer()) throw Error("level " + std::to_string(level) + " is not a conductor");
            return ring.reduce(x.num());
          };
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) form.coef[2 * i + j] = integral(sr * rows[k][i] * w[j]);
          form.rhs = integral(sr * vk[k]);
          forms.push_back(form);
        }
      }
    }
    auto sub = select(group, [&](const ModMat& m) {
      for (const auto& form : forms) {
        long acc = 0;
        for (int i = 0; i < 4; ++i) acc = ring.add(acc, ring.mul(form.coef[i], m.e[i]));
        if (acc != form.rhs) return false;
      }
      return true;
    });
    auto cert = certify_subgroup(group, sub);
    if (cert.is_subgroup) return EFSubgroup{std::move(group), std::move(sub), std::move(cert)};
    s *= 2;
  }
}

}  // namespace hecke
