#include <doctest.h>

#include <deque>
#include <set>

#include "hecke/error.hpp"
#include "hecke/tower/tower.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

const PairDescriptor& gl2() {
  static const PairDescriptor desc = PairDescriptor::full_gl2(2);
  return desc;
}

// Closure of the generators under the stage multiplication.
std::size_t generated_order(const TowerStage& stage) {
  std::set<std::size_t> seen{stage.identity()};
  std::deque<std::size_t> queue{stage.identity()};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (auto g : stage.generators()) {
      std::size_t y = stage.mul(x, g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("make_E") {
  const auto& desc = gl2();
  CHECK(make_E(desc, {}).size() == 1);
  CHECK(make_E(desc, {Mat2{1, 1, 0, 1}, Mat2{0, 1, 1, 0}}).size() == 1);
  CosetFamilyE e = make_E(desc, {Mat2::diag(2, 1)});
  // The identity coset plus the cosets of R diag(2,1) R, one per lattice of index 2.
  CHECK(e.size() == 1 + oracle::sublattices_of_index(2).size());
  CHECK(e.reps.front().is_identity());
  CHECK(e.contains(desc, Mat2{1, 1, 0, 1} * Mat2::diag(2, 1)));
  CHECK_FALSE(e.contains(desc, Mat2::diag(4, 1)));
}

TEST_CASE("make_F") {
  const auto& desc = gl2();
  CHECK(make_F(desc, make_E(desc, {})).f_lattice == desc.M());
  CosetFamilyE e = make_E(desc, {Mat2::diag(2, 1)});
  Lattice direct = desc.M();
  for (const auto& t : e.reps) direct = lattice_sum(direct, transform_lattice(t.inverse(), desc.M()));
  FamilyF f = make_F(desc, e);
  CHECK(f.f_lattice.contains(direct));
  CHECK(f.f_lattice == Lattice::scaled(Rat(1, 2)));
  FamilyF g = make_F(desc, e, Lattice::scaled(Rat(1, 3)));
  CHECK(g.f_lattice.contains(Lattice::scaled(Rat(1, 3))));
  CHECK(g.f_lattice.contains(f.f_lattice));
}

TEST_CASE("compute_M_E against box enumeration") {
  const auto& desc = gl2();
  CHECK(compute_M_E(desc, make_E(desc, {})) == desc.M());
  CosetFamilyE e = make_E(desc, {Mat2::diag(2, 1)});
  Lattice me = compute_M_E(desc, e);
  CHECK(me == Lattice::scaled(2));
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      bool all = true;
      for (const auto& t : e.reps) all = all && transform_lattice(t, desc.M()).contains(Vec2{x, y});
      REQUIRE(me.contains(Vec2{x, y}) == all);
    }
  CosetFamilyE bigger = make_E(desc, {Mat2::diag(2, 1), Mat2::diag(4, 1)});
  CHECK(me.contains(compute_M_E(desc, bigger)));
}

TEST_CASE("compute_R_EF") {
  const auto& desc = gl2();
  CosetFamilyE e0 = make_E(desc, {});
  EFSubgroup all = compute_R_EF(desc, e0, {desc.M()});
  CHECK(all.index() == 1);
  EFSubgroup half = compute_R_EF(desc, e0, {Lattice::scaled(Rat(1, 2))});
  CHECK(half.cert.is_subgroup);
  for (auto key : half.group.elements()) {
    Mat2 lift = ModMat::from_key(key).lift();
    bool congruent = ((lift - Mat2::identity()) * Vec2{Rat(1, 2), 0}).is_integral() &&
                     ((lift - Mat2::identity()) * Vec2{0, Rat(1, 2)}).is_integral();
    REQUIRE(half.sub.contains(key) == congruent);
  }
  CHECK(half.index() == 6);
}

TEST_CASE("stage orders") {
  const auto& desc = gl2();
  CosetFamilyE e0 = make_E(desc, {});
  TowerStage trivial = TowerStage::build(desc, e0, make_F(desc, e0));
  CHECK(trivial.order() == 1);

  CosetFamilyE e = make_E(desc, {Mat2::diag(2, 1)});
  TowerStage stage = TowerStage::build(desc, e, make_F(desc, e));
  CHECK(stage.m_order() == 4);
  CHECK(stage.order() == stage.m_order() * stage.R_EF().index());
  CHECK(generated_order(stage) == stage.order());
  CHECK(verify_lemmas(stage).all_pass());
  CHECK(verify_lemmas(trivial).all_pass());
  auto iso = quotient_isomorphism_check(stage);
  REQUIRE(iso.has_value());
  CHECK(*iso);
}

TEST_CASE("family conditions gate the lemma checks") {
  const auto& desc = gl2();
  CosetFamilyE e = make_E(desc, {Mat2::diag(2, 1)});
  CHECK_THROWS_AS(verify_lemmas(desc, e, FamilyF{desc.M()}), FamilyConditionViolated);
  CosetFamilyE partial = family_from_reps(desc, {Mat2::diag(2, 1)});
  CHECK_THROWS_AS(check_family_conditions(desc, partial, make_F(desc, e)), FamilyConditionViolated);
  CHECK_THROWS_AS(check_family_conditions(desc, e, FamilyF{Lattice::scaled(2)}), FamilyConditionViolated);
}

TEST_CASE("connecting maps") {
  const auto& desc = gl2();
  Tower tower = build_tower(desc, {Mat2::diag(2, 1), Mat2::diag(4, 1)}, 2);
  REQUIRE(tower.stages.size() == 3);
  REQUIRE(tower.maps.size() == 2);
  for (const auto& stage : tower.stages) CHECK(stage.order() == stage.m_order() * stage.r_order());

  ConnectingMap self = connecting_map(tower.stages[1], tower.stages[1]);
  for (std::size_t x = 0; x < self.image.size(); ++x) REQUIRE(self.image[x] == x);

  const ConnectingMap& down = tower.maps[1];
  CHECK(down.homomorphism);
  CHECK(down.surjective);
  CHECK(down.kernel_size * tower.stages[1].order() == tower.stages[2].order());

  ConnectingMap composite = connecting_map(tower.stages[2], tower.stages[0]);
  for (std::size_t x = 0; x < composite.image.size(); ++x)
    REQUIRE(composite.image[x] == tower.maps[0].image[down.image[x]]);

  CHECK_THROWS_AS(connecting_map(tower.stages[0], tower.stages[2]), NotComparable);
  CHECK(verify_tower(tower).all_pass());
}

TEST_CASE("tower with no seeds") {
  Tower tower = build_tower(gl2(), {}, 0);
  CHECK(tower.stages.size() == 1);
  CHECK(tower.stages[0].order() == 1);
}
