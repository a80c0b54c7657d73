#include "hecke/tower/tower.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using nlohmann::json;

const char* kLemmaNormalAnchor = "R^E_F is normal in R";
const char* kLemmaMEAnchor = "M_E is normal in H: r M_E r^-1 = M_E";
const char* kLemmaActionAnchor = "R^E_F ⊂ R_{M,M_E}: R^E_F acts trivially on M/M_E";
const char* kOrderAnchor = "|M/M_E x| R/R^E_F| = [M:M_E][R:R^E_F]";
const char* kMapAnchor = "inverse system: connecting maps are surjective homomorphisms";
const char* kTriangleAnchor = "inverse system: connecting maps compose";
const char* kQuotientAnchor = "M R / L S ≅ (M/L) x| (R/S)";

using AKey = std::pair<long, std::uint64_t>;
struct AKeyHash {
  std::size_t operator()(const AKey& k) const {
    return std::hash<std::uint64_t>{}(k.second * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k.first));
  }
};

std::string coset_key(const PairDescriptor& desc, const Mat2& q) {
  return transform_lattice(q, desc.M()).str();
}

// R-orbit of a lattice under left multiplication.
std::vector<Lattice> lattice_orbit(const PairDescriptor& desc, const Lattice& start, const Bounds& bounds) {
  std::set<std::string> seen{start.str()};
  std::vector<Lattice> orbit{start};
  for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
    for (const auto& r : desc.r_generators_symmetric()) {
      Lattice next = transform_lattice(r, orbit[pos]);
      if (!seen.insert(next.str()).second) continue;
      if (orbit.size() >= bounds.coset_enum_max)
        throw EnumerationBound("R-orbit of " + start.str() + " exceeds " + std::to_string(bounds.coset_enum_max));
      orbit.push_back(next);
    }
  }
  return orbit;
}

}  // namespace

bool CosetFamilyE::contains(const PairDescriptor& desc, const Mat2& q) const {
  return std::find(keys.begin(), keys.end(), coset_key(desc, q)) != keys.end();
}

CosetFamilyE make_E(const PairDescriptor& desc, const std::vector<Mat2>& seed, const Bounds& bounds) {
  std::map<std::string, Mat2> cosets;
  std::vector<Mat2> starts{Mat2::identity()};
  for (const auto& q : seed) {
    if (!desc.in_Q(q)) throw NotInQ(q.str() + " is not in Q for " + desc.name());
    starts.push_back(q);
  }
  for (const auto& q : starts) {
    // Left cosets r q R for r in R, tracked through the lattices r q M.
    std::deque<Mat2> queue;
    if (cosets.emplace(coset_key(desc, q), q).second) queue.push_back(q);
    while (!queue.empty()) {
      Mat2 cur = queue.front();
      queue.pop_front();
      for (const auto& r : desc.r_generators_symmetric()) {
        Mat2 next = r * cur;
        if (!cosets.emplace(coset_key(desc, next), next).second) continue;
        if (cosets.size() > bounds.coset_enum_max)
          throw EnumerationBound("E exceeds " + std::to_string(bounds.coset_enum_max) + " cosets");
        queue.push_back(next);
      }
    }
  }
  const std::string id_key = coset_key(desc, Mat2::identity());
  CosetFamilyE e;
  e.reps.push_back(Mat2::identity());
  e.keys.push_back(id_key);
  for (const auto& [key, t] : cosets) {
    if (key == id_key) continue;
    e.reps.push_back(t);
    e.keys.push_back(key);
  }
  return e;
}

CosetFamilyE family_from_reps(const PairDescriptor& desc, const std::vector<Mat2>& reps) {
  CosetFamilyE e;
  const std::string id_key = coset_key(desc, Mat2::identity());
  bool has_identity = false;
  for (const auto& t : reps) has_identity = has_identity || coset_key(desc, t) == id_key;
  if (!has_identity) {
    e.reps.push_back(Mat2::identity());
    e.keys.push_back(id_key);
  }
  for (const auto& t : reps) {
    e.reps.push_back(t);
    e.keys.push_back(coset_key(desc, t));
  }
  return e;
}

Lattice r_saturate(const PairDescriptor& desc, const Lattice& l, const Bounds& bounds) {
  Lattice sum = l;
  for (const auto& member : lattice_orbit(desc, l, bounds)) sum = lattice_sum(sum, member);
  return sum;
}

FamilyF make_F(const PairDescriptor& desc, const CosetFamilyE& e, const std::optional<Lattice>& seed_f,
               const Bounds& bounds) {
  Lattice f = desc.M();
  for (const auto& t : e.reps) f = lattice_sum(f, transform_lattice(t.inverse(), desc.M()));
  if (seed_f) f = lattice_sum(f, *seed_f);
  return FamilyF{r_saturate(desc, f, bounds)};
}

Lattice compute_M_E(const PairDescriptor& desc, const CosetFamilyE& e) {
  Lattice m_e = desc.M();
  for (const auto& t : e.reps) m_e = lattice_intersect(m_e, transform_lattice(t, desc.M()));
  return m_e;
}

EFSubgroup compute_R_EF(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f, const Bounds& bounds,
                        const Int& level_multiple) {
  return R_EF_residues(desc, e.reps, r_saturate(desc, f.f_lattice, bounds), bounds, level_multiple);
}

void check_family_conditions(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f,
                             const Bounds& bounds) {
  // (1) finitely many distinct left cosets with matching keys.
  std::set<std::string> distinct;
  if (e.reps.size() != e.keys.size()) throw FamilyConditionViolated("(1) representatives and keys differ in length");
  for (std::size_t i = 0; i < e.reps.size(); ++i) {
    if (!desc.in_Q(e.reps[i])) throw FamilyConditionViolated("(1) " + e.reps[i].str() + " is not in Q");
    if (coset_key(desc, e.reps[i]) != e.keys[i])
      throw FamilyConditionViolated("(1) stale key for " + e.reps[i].str());
    if (!distinct.insert(e.keys[i]).second)
      throw FamilyConditionViolated("(1) coset of " + e.reps[i].str() + " listed twice");
  }
  // (2) e in E.
  if (!distinct.count(coset_key(desc, Mat2::identity()))) throw FamilyConditionViolated("(2) identity coset missing");
  // (3) R E = E; E R = E holds since E is stored as left cosets.
  for (const auto& t : e.reps)
    for (const auto& r : desc.r_generators_symmetric())
      if (!distinct.count(coset_key(desc, r * t)))
        throw FamilyConditionViolated("(3) " + (r * t).str() + " leaves E");
  // (5) F is a finite union of cosets of M: a lattice containing M.
  if (!f.f_lattice.contains(desc.M())) throw FamilyConditionViolated("(5) F = " + f.f_lattice.str() + " misses M");
  // (6) q^{-1} M ⊂ F for every q = t r in E, i.e. the whole R-orbit of t^{-1} M.
  for (const auto& t : e.reps)
    for (const auto& l : lattice_orbit(desc, transform_lattice(t.inverse(), desc.M()), bounds))
      if (!f.f_lattice.contains(l))
        throw FamilyConditionViolated("(6) " + l.str() + " is not contained in F = " + f.f_lattice.str());
}

TowerStage TowerStage::build(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f,
                             const Bounds& bounds, const Int& level_multiple) {
  check_family_conditions(desc, e, f, bounds);
  Lattice m_e = compute_M_E(desc, e);
  // The level must see the action on M/M_E, whose exponent is the least k with k Z^2 ⊂ M_E.
  Int level = lcm(level_multiple, scalar_exponent(m_e));
  EFSubgroup r_ef = compute_R_EF(desc, e, f, bounds, level);

  Int m_order = lattice_index(desc.M(), m_e);
  Int order = m_order * Int(static_cast<unsigned long>(r_ef.index()));
  if (order > Int(static_cast<unsigned long>(bounds.stage_order_max)))
    throw StageTooLarge("stage order " + order.get_str() + " exceeds " + std::to_string(bounds.stage_order_max));

  TowerStage stage(desc, e, f, m_e, std::move(r_ef));
  stage.quot_r_ = coset_table(stage.r_ef_.group, stage.r_ef_.sub);

  const long a = to_long(m_e.a().num());
  const long d = to_long(m_e.d().num());
  stage.quot_m_.reserve(static_cast<std::size_t>(a * d));
  for (long x = 0; x < a; ++x)
    for (long y = 0; y < d; ++y) stage.quot_m_.push_back(Vec2{x, y});

  const std::size_t mo = stage.m_order(), ro = stage.r_order();
  stage.act_.resize(mo * ro);
  for (std::size_t rho = 0; rho < ro; ++rho) {
    const Mat2 lift = stage.r_rep(rho).lift();
    for (std::size_t m = 0; m < mo; ++m) stage.act_[rho * mo + m] = stage.m_index(lift * stage.quot_m_[m]);
  }

  // R^E_F must act trivially on M/M_E, otherwise the action is not defined on R/R^E_F.
  for (auto key : stage.r_ef_.sub.elements) {
    const Mat2 lift = ModMat::from_key(key).lift();
    for (const auto& m : desc.m_generators())
      if (!m_e.contains(lift * m - m))
        throw ActionNotWellDefined("residue " + ModMat::from_key(key).str() + " moves " + m.str() + " modulo M_E");
  }

  for (const auto& m : desc.m_generators()) stage.gens_.push_back(stage.encode(stage.m_index(m), 0));
  const ResidueRing& ring = stage.r_ef_.group.ring();
  for (const auto& r : desc.r_generators_symmetric())
    stage.gens_.push_back(stage.encode(0, stage.r_label(ModMat::from(r, ring))));
  return stage;
}

std::size_t TowerStage::m_index(const Vec2& v) const {
  const Vec2 red = m_e_.reduce(v);
  if (!red.is_integral()) throw Error("vector " + v.str() + " is not in M");
  return static_cast<std::size_t>(to_long(red.x.num()) * to_long(m_e_.d().num()) + to_long(red.y.num()));
}

std::size_t TowerStage::mul(std::size_t x, std::size_t y) const {
  const std::size_t m1 = m_part(x), r1 = r_part(x), m2 = m_part(y), r2 = r_part(y);
  const std::size_t m = m_index(quot_m_[m1] + quot_m_[act(r1, m2)]);
  const ModMat prod = r_ef_.group.mul(r_rep(r1), r_rep(r2));
  return encode(m, r_label(prod));
}

Report verify_lemmas(const TowerStage& stage) {
  const auto& desc = stage.descriptor();
  Report report("verify_lemmas");
  json e_json = json::array();
  for (const auto& t : stage.E().reps) e_json.push_back(t.str());
  json inputs{{"pair", desc.name()}, {"E", e_json}, {"F", stage.F().f_lattice.str()}};

  const auto& ef = stage.R_EF();
  bool normal = ef.cert.is_subgroup && is_normal(ef.group, ef.sub, ef.cert);
  report.add({"lemma.R_EF_normal", inputs,
              json{{"level", ef.level()}, {"index", ef.index()}, {"certificate_generators", ef.cert.generators.size()}},
              normal ? Verdict::Pass : Verdict::Fail, kLemmaNormalAnchor});

  bool invariant = true;
  for (const auto& r : desc.r_generators_symmetric())
    invariant = invariant && transform_lattice(r, stage.m_e()) == stage.m_e();
  invariant = invariant && desc.M().contains(stage.m_e());
  report.add({"lemma.M_E_invariant", inputs,
              json{{"M_E", stage.m_e().str()}, {"index", lattice_index(desc.M(), stage.m_e()).get_str()}},
              invariant ? Verdict::Pass : Verdict::Fail, kLemmaMEAnchor});

  std::size_t violations = 0;
  for (auto key : ef.sub.elements) {
    const Mat2 lift = ModMat::from_key(key).lift();
    for (const auto& m : desc.m_generators())
      if (!stage.m_e().contains(lift * m - m)) ++violations;
  }
  report.add({"lemma.R_EF_acts_trivially", inputs,
              json{{"residues_checked", ef.sub.size()}, {"violations", violations}},
              violations == 0 ? Verdict::Pass : Verdict::Fail, kLemmaActionAnchor});
  return report;
}

Report verify_lemmas(const PairDescriptor& desc, const CosetFamilyE& e, const FamilyF& f, const Bounds& bounds) {
  return verify_lemmas(TowerStage::build(desc, e, f, bounds));
}

ConnectingMap connecting_map(const TowerStage& fine, const TowerStage& coarse) {
  if (!coarse.m_e().contains(fine.m_e()))
    throw NotComparable("M_E " + fine.m_e().str() + " is not inside " + coarse.m_e().str());
  if (fine.level() % coarse.level() != 0)
    throw NotComparable("level " + std::to_string(coarse.level()) + " does not divide " + std::to_string(fine.level()));
  auto reduced = reduce_level(fine.R_EF().sub, coarse.level());
  for (auto key : reduced.elements)
    if (!coarse.R_EF().sub.contains(key)) throw NotComparable("R^E_F of the fine stage does not reduce into the coarse one");

  const ResidueRing coarse_ring(coarse.level());
  auto reduce = [&](const ModMat& m) {
    ModMat out = m;
    for (auto& x : out.e) x = coarse_ring.reduce(x);
    return out;
  };
  std::vector<std::size_t> r_image(fine.r_order());
  for (std::size_t rho = 0; rho < fine.r_order(); ++rho) r_image[rho] = coarse.r_label(reduce(fine.r_rep(rho)));
  std::vector<std::size_t> m_image(fine.m_order());
  for (std::size_t m = 0; m < fine.m_order(); ++m) m_image[m] = coarse.m_index(fine.m_vector(m));

  ConnectingMap map;
  map.image.resize(fine.order());
  for (std::size_t x = 0; x < fine.order(); ++x)
    map.image[x] = coarse.encode(m_image[fine.m_part(x)], r_image[fine.r_part(x)]);

  map.homomorphism = true;
  for (std::size_t x = 0; x < fine.order() && map.homomorphism; ++x)
    for (auto g : fine.generators())
      if (map.image[fine.mul(x, g)] != coarse.mul(map.image[x], map.image[g])) {
        map.homomorphism = false;
        break;
      }
  std::unordered_set<std::size_t> hit(map.image.begin(), map.image.end());
  map.surjective = hit.size() == coarse.order();
  map.kernel_size = static_cast<std::size_t>(std::count(map.image.begin(), map.image.end(), coarse.identity()));
  return map;
}

std::optional<bool> quotient_isomorphism_check(const TowerStage& stage, std::size_t max_order) {
  if (stage.order() > max_order) return std::nullopt;
  const auto& desc = stage.descriptor();
  const auto& group = stage.R_EF().group;
  const ResidueRing& ring = group.ring();
  const long e = to_long(scalar_exponent(stage.m_e()));
  const ResidueRing vring(e);

  // Elements of the image A of H in (Z^2/eZ^2) x| R/R(s).
  struct AElem {
    long x, y;
    ModMat r;
  };
  auto key_of = [&](const AElem& a) { return AKey{a.x * e + a.y, a.r.key()}; };
  auto a_mul = [&](const AElem& p, const AElem& q) {
    auto v = apply(p.r, {q.x, q.y}, ring);
    return AElem{vring.reduce(p.x + v[0]), vring.reduce(p.y + v[1]), group.mul(p.r, q.r)};
  };
  auto lift_vec = [&](const Vec2& v) { return AElem{vring.reduce(v.x.num()), vring.reduce(v.y.num()), ModMat::identity(ring)}; };

  std::vector<AElem> a_gens;
  for (const auto& m : desc.m_generators()) a_gens.push_back(lift_vec(m));
  for (const auto& r : desc.r_generators_symmetric()) a_gens.push_back(AElem{0, 0, ModMat::from(r, ring)});

  const AElem a_id{0, 0, ModMat::identity(ring)};
  std::unordered_map<AKey, std::size_t, AKeyHash> a_index{{key_of(a_id), 0}};
  std::vector<AElem> a_elems{a_id};
  for (std::size_t pos = 0; pos < a_elems.size(); ++pos)
    for (const auto& g : a_gens) {
      AElem next = a_mul(a_elems[pos], g);
      if (a_index.emplace(key_of(next), a_elems.size()).second) a_elems.push_back(next);
    }

  // Image of L S = M_E R^E_F in A, generated by a basis of M_E and the certificate of R^E_F.
  std::vector<AElem> ls_gens{lift_vec(stage.m_e().col0()), lift_vec(stage.m_e().col1())};
  for (const auto& g : stage.R_EF().cert.generators) ls_gens.push_back(AElem{0, 0, g});
  std::unordered_set<AKey, AKeyHash> ls_seen{key_of(a_id)};
  std::vector<AElem> ls{a_id};
  for (std::size_t pos = 0; pos < ls.size(); ++pos)
    for (const auto& g : ls_gens) {
      AElem next = a_mul(ls[pos], g);
      if (ls_seen.insert(key_of(next)).second) ls.push_back(next);
    }

  // Left cosets x L S in A.
  std::vector<std::size_t> label(a_elems.size(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < a_elems.size(); ++i) {
    if (label[i] != SIZE_MAX) continue;
    const std::size_t c = reps.size();
    reps.push_back(i);
    for (const auto& l : ls) label[a_index.at(key_of(a_mul(a_elems[i], l)))] = c;
  }
  if (reps.size() != stage.order()) return false;

  // psi: x L S -> (m mod M_E, r mod R^E_F), on the chosen representatives.
  std::vector<std::size_t> psi(reps.size());
  std::unordered_set<std::size_t> psi_seen;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const AElem& a = a_elems[reps[c]];
    psi[c] = stage.encode(stage.m_index(Vec2{a.x, a.y}), stage.r_label(a.r));
    psi_seen.insert(psi[c]);
  }
  if (psi_seen.size() != reps.size()) return false;

  // L S is normal in A: conjugates of its generators by the A generators stay inside.
  auto a_inv = [&](const AElem& p) {
    AElem q{0, 0, group.inverse(p.r)};
    auto v = apply(q.r, {p.x, p.y}, ring);
    q.x = vring.reduce(-v[0]);
    q.y = vring.reduce(-v[1]);
    return q;
  };
  for (const auto& g : a_gens)
    for (const auto& l : ls_gens)
      if (!ls_seen.count(key_of(a_mul(a_mul(g, l), a_inv(g))))) return false;

  // psi respects right multiplication by each generator; with bijectivity this makes it an isomorphism.
  for (const auto& g : a_gens) {
    const std::size_t pg = psi[label[a_index.at(key_of(g))]];
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const AElem prod = a_mul(a_elems[reps[c]], g);
      if (psi[label[a_index.at(key_of(prod))]] != stage.mul(psi[c], pg)) return false;
    }
  }
  return true;
}

Tower build_tower(const PairDescriptor& desc, const std::vector<Mat2>& seeds, std::size_t stages,
                  const Bounds& bounds) {
  Tower tower;
  const std::size_t count = std::min(stages, seeds.size());
  Int level = 1;
  for (std::size_t j = 0; j <= count; ++j) {
    std::vector<Mat2> seed(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(j));
    CosetFamilyE e = make_E(desc, seed, bounds);
    FamilyF f = make_F(desc, e, std::nullopt, bounds);
    tower.stages.push_back(TowerStage::build(desc, e, f, bounds, level));
    level = tower.stages.back().level();
  }
  for (std::size_t j = 0; j + 1 < tower.stages.size(); ++j)
    tower.maps.push_back(connecting_map(tower.stages[j + 1], tower.stages[j]));
  return tower;
}

Report verify_tower(const Tower& tower, std::size_t triangle_exhaustive_max, std::size_t quotient_check_max) {
  Report report("tower");
  for (std::size_t j = 0; j < tower.stages.size(); ++j) {
    const auto& stage = tower.stages[j];
    const auto& desc = stage.descriptor();
    Report lemmas = verify_lemmas(stage);
    for (auto rec : lemmas.records()) {
      rec.inputs["stage"] = j;
      report.add(std::move(rec));
    }

    json inputs{{"pair", desc.name()}, {"stage", j}};
    // Order of the group generated by the H generators against the index product.
    std::vector<char> seen(stage.order(), 0);
    std::vector<std::size_t> queue{stage.identity()};
    seen[stage.identity()] = 1;
    for (std::size_t pos = 0; pos < queue.size(); ++pos)
      for (auto g : stage.generators()) {
        auto next = stage.mul(queue[pos], g);
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    Int m_index = lattice_index(desc.M(), stage.m_e());
    Int r_index(static_cast<unsigned long>(stage.R_EF().index()));
    Int product = m_index * r_index;
    bool order_ok = Int(static_cast<unsigned long>(queue.size())) == product &&
                    Int(static_cast<unsigned long>(stage.order())) == product;
    auto [d1, d2] = stage.invariant_factors();
    report.add({"stage.order", inputs,
                json{{"M_index", m_index.get_str()},
                     {"invariant_factors", {d1.get_str(), d2.get_str()}},
                     {"R_index", r_index.get_str()},
                     {"level", stage.level()},
                     {"semidirect_order", queue.size()}},
                order_ok ? Verdict::Pass : Verdict::Fail, kOrderAnchor});

    auto iso = quotient_isomorphism_check(stage, quotient_check_max);
    report.add({"stage.quotient_isomorphism", inputs,
                json{{"checked", iso.has_value()}, {"order", stage.order()}},
                !iso ? Verdict::Inconclusive : (*iso ? Verdict::Pass : Verdict::Fail), kQuotientAnchor});
  }

  for (std::size_t j = 0; j < tower.maps.size(); ++j) {
    const auto& map = tower.maps[j];
    json inputs{{"fine", j + 1}, {"coarse", j}};
    bool kernel_ok = map.kernel_size * tower.stages[j].order() == tower.stages[j + 1].order();
    report.add({"tower.connecting_map", inputs,
                json{{"homomorphism", map.homomorphism}, {"surjective", map.surjective}, {"kernel_size", map.kernel_size}},
                map.homomorphism && map.surjective && kernel_ok ? Verdict::Pass : Verdict::Fail, kMapAnchor});
  }

  // Triangles i <- j <- k against the direct map k -> i.
  for (std::size_t i = 0; i < tower.stages.size(); ++i)
    for (std::size_t j = i + 1; j < tower.stages.size(); ++j)
      for (std::size_t k = j + 1; k < tower.stages.size(); ++k) {
        const auto& fine = tower.stages[k];
        auto direct = connecting_map(fine, tower.stages[i]);
        auto kj = connecting_map(fine, tower.stages[j]);
        auto ji = connecting_map(tower.stages[j], tower.stages[i]);
        const bool exhaustive = fine.order() <= triangle_exhaustive_max;
        bool commutes = true;
        auto check = [&](std::size_t x) {
          if (ji.image[kj.image[x]] != direct.image[x]) commutes = false;
        };
        if (exhaustive)
          for (std::size_t x = 0; x < fine.order(); ++x) check(x);
        else
          for (auto g : fine.generators()) check(g);
        report.add({"tower.triangle", json{{"stages", {i, j, k}}},
                    json{{"exhaustive", exhaustive}, {"commutes", commutes}},
                    commutes ? Verdict::Pass : Verdict::Fail, kTriangleAnchor});
      }
  return report;
}

}  // namespace hecke
