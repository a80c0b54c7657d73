#include <doctest.h>

#include <deque>
#include <set>

#include "hecke/error.hpp"
#include "hecke/group/gelem.hpp"
#include "hecke/group/sampling.hpp"
#include "hecke/group/stabilizers.hpp"
#include "hecke/group/verify.hpp"
#include "hecke/random.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

const CheckRecord* find(const Report& report, const std::string& name, const std::string& input_key = "",
                        const std::string& input_value = "") {
  for (const auto& r : report.records())
    if (r.name == name && (input_key.empty() || r.inputs.value(input_key, "") == input_value)) return &r;
  return nullptr;
}

// Random element of G for the FullGL2 / Z[1/2] pair.
GElem random_elem(const PairDescriptor& desc, Rng& rng) {
  const Mat2 steps[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, -1}, Mat2::diag(2, 1), Mat2::diag(Rat(1, 2), 1)};
  Mat2 q = Mat2::identity();
  for (int i = rng.uniform(0, 4); i > 0; --i) q = q * steps[rng.index(5)];
  Vec2 n{Rat(rng.uniform(-8, 8), 1L << rng.uniform(0, 3)), Rat(rng.uniform(-8, 8), 1L << rng.uniform(0, 3))};
  return make_elem(desc, n, q);
}

// Orbit of v in (Z/s)^2 under the reduced generators, with plain integers.
std::size_t vector_orbit(const std::vector<std::array<long, 4>>& gens, long vx, long vy, long s) {
  std::set<std::pair<long, long>> seen{{vx, vy}};
  std::deque<std::pair<long, long>> queue{{vx, vy}};
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::pair<long, long> next{(((g[0] * x + g[1] * y) % s) + s) % s, (((g[2] * x + g[3] * y) % s) + s) % s};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("group law examples") {
  auto desc = PairDescriptor::full_gl2(2);
  GElem e = identity(desc);
  GElem x = make_elem(desc, {1, 0}, Mat2::identity());
  GElem y = make_elem(desc, {0, 1}, Mat2::identity());
  GElem d = pure_q(desc, Mat2::diag(2, 1));
  CHECK(mul(desc, e, x) == x);
  CHECK(mul(desc, x, y) == make_elem(desc, {1, 1}, Mat2::identity()));
  CHECK(mul(desc, d, x) == make_elem(desc, {2, 0}, Mat2::diag(2, 1)));
  CHECK(inv(desc, e) == e);
  CHECK(inv(desc, x) == make_elem(desc, {-1, 0}, Mat2::identity()));
  CHECK(inv(desc, d) == pure_q(desc, Mat2::diag(Rat(1, 2), 1)));
  CHECK(in_H(desc, e));
  CHECK_FALSE(in_H(desc, pure_n(desc, {Rat(1, 2), 0})));
  CHECK_FALSE(in_H(desc, d));
  CHECK_THROWS_AS(make_elem(desc, {Rat(1, 3), 0}, Mat2::identity()), NotInN);
  CHECK_THROWS_AS(pure_q(desc, Mat2::diag(3, 1)), NotInQ);
  auto other = PairDescriptor::full_gl2(3);
  CHECK_THROWS_AS(mul(desc, x, identity(other)), DescriptorMismatch);
}

TEST_CASE("group axioms on 1000 random triples") {
  auto desc = PairDescriptor::full_gl2(2);
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    GElem a = random_elem(desc, rng), b = random_elem(desc, rng), c = random_elem(desc, rng);
    REQUIRE(mul(desc, mul(desc, a, b), c) == mul(desc, a, mul(desc, b, c)));
    REQUIRE(mul(desc, a, inv(desc, a)) == identity(desc));
    REQUIRE(mul(desc, inv(desc, a), a) == identity(desc));
    REQUIRE(mul(desc, identity(desc), a) == a);
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(PairDescriptor::full_gl2(4), ConfigInvalid);
  CHECK_THROWS_AS(PairDescriptor::quad_torus(5, 2), ConfigInvalid);
  CHECK_THROWS_AS(PairDescriptor::make(Family::Planar, 2, QKind::FullGL2, 0, Lattice::standard(), {Mat2::diag(2, 1)}),
                  ConfigInvalid);
  CHECK_THROWS_AS(PairDescriptor::make(Family::Heisenberg, 2, QKind::FullGL2, 0, Lattice::standard(),
                                       default_r_generators(QKind::FullGL2, 0)),
                  ConfigInvalid);
  auto torus = PairDescriptor::quad_torus(2, 2);
  CHECK(torus.in_Q(Mat2{1, 2, 1, 1}));
  CHECK_FALSE(torus.in_Q(Mat2::diag(2, 1)));
}

TEST_CASE("M_q and index_R_q") {
  for (long p : {2L, 3L, 5L}) {
    auto desc = PairDescriptor::full_gl2(p);
    CHECK(M_q(desc, Mat2::diag(p, 1)) == hnf(Mat2::diag(p, 1)));
    CHECK(M_q(desc, Mat2::diag(Rat(1, p), 1)) == Lattice::standard());
    CHECK(M_q(desc, Mat2{1, 1, 0, 1}) == Lattice::standard());
    Int expected = static_cast<long>(oracle::sublattices_of_index(p).size());
    CHECK(index_R_q(desc, Mat2::diag(p, 1), {}) == expected);
    CHECK(count_RqR_cosets(desc, Mat2::diag(p, 1), {}) == expected);
    CHECK(index_R_q(desc, Mat2::identity(), {}) == 1);
    CHECK(index_R_q(desc, Mat2{0, 1, 1, 0}, {}) == 1);
  }
}

TEST_CASE("index_R_nM against vector orbits") {
  const std::vector<std::array<long, 4>> gl2_gens{{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, -1}};
  for (long p : {2L, 3L, 5L}) {
    auto desc = PairDescriptor::full_gl2(p);
    Int idx = index_R_nM(desc, {Rat(1, p), 0}, {});
    CHECK(idx == p * p - 1);
    CHECK(idx == static_cast<long>(vector_orbit(gl2_gens, 1, 0, p)));
    CHECK(index_R_nM_by_stabilizer(desc, {Rat(1, p), 0}, {}) == idx);
    CHECK(index_R_nM(desc, {3, -1}, {}) == 1);
  }
  auto desc2 = PairDescriptor::full_gl2(2);
  CHECK(index_R_nM(desc2, {Rat(1, 2), Rat(1, 2)}, {}) == 3);
  auto heis = PairDescriptor::heisenberg();
  for (long m = 1; m <= 12; ++m) CHECK(index_R_nM(heis, {0, Rat(1, m)}, {}) == m);
}

TEST_CASE("is_hecke_pair example") {
  auto desc = PairDescriptor::full_gl2(2);
  Report r = is_hecke_pair(desc, {Mat2::diag(2, 1)}, {{Rat(1, 2), 0}});
  CHECK(r.all_pass());
  const auto* q = find(r, "hecke.q");
  REQUIRE(q);
  CHECK(q->outputs["M_index"] == "2");
  CHECK(q->outputs["R_index"] == "3");
  const auto* n = find(r, "hecke.n");
  REQUIRE(n);
  CHECK(n->outputs["R_nM_index"] == "3");

  Report trivial = is_hecke_pair(desc, {Mat2{1, 1, 0, 1}}, {{1, 2}});
  CHECK(find(trivial, "hecke.q")->outputs["M_index"] == "1");
  CHECK(find(trivial, "hecke.q")->outputs["R_index"] == "1");
  CHECK(find(trivial, "hecke.n")->outputs["R_nM_index"] == "1");
}

TEST_CASE("R^E_F membership matches the compiled residue selection") {
  auto desc = PairDescriptor::full_gl2(2);
  std::vector<Mat2> reps{Mat2::identity(), Mat2::diag(2, 1), Mat2{2, 1, 0, 1}};
  Lattice f = hnf(Mat2::diag(Rat(1, 2), Rat(1, 2)));
  EFSubgroup ef = R_EF_residues(desc, reps, f, {});
  CHECK(ef.cert.is_subgroup);
  for (auto key : ef.group.elements()) {
    ModMat m = ModMat::from_key(key);
    REQUIRE(ef.sub.contains(key) == in_R_EF(reps, f, m.lift()));
  }
  CHECK(ef.level() % conductor_for_EF(reps, f).get_si() == 0);
}

TEST_CASE("reduced_check stages") {
  auto desc = PairDescriptor::full_gl2(2);
  Report r = reduced_check(desc, std::vector<std::vector<Mat2>>{{Mat2::diag(2, 1), Mat2::diag(1, 2), Mat2::diag(4, 1)}});
  const auto* stage = find(r, "reduced.stage");
  REQUIRE(stage);
  CHECK(stage->outputs["M_index"] == "8");
  CHECK(stage->outputs["M_E"] == hnf(Mat2::diag(4, 2)).str());

  Report id = reduced_check(desc, std::vector<std::vector<Mat2>>{{Mat2::identity()}});
  CHECK(find(id, "reduced.stage")->outputs["M_index"] == "1");

  auto torus = PairDescriptor::quad_torus(2, 2);
  Report tr = reduced_check(torus, default_reduced_stages(torus));
  const auto* faithful = find(tr, "reduced.action_faithful");
  REQUIRE(faithful);
  CHECK(faithful->verdict == Verdict::Pass);
  CHECK(faithful->outputs["level"] == 3);
  CHECK(find(tr, "reduced.verdict")->verdict == Verdict::Pass);

  for (auto d : {PairDescriptor::full_gl2(2), PairDescriptor::heisenberg(2)})
    CHECK(find(reduced_check(d, default_reduced_stages(d)), "reduced.verdict")->verdict == Verdict::Pass);
}

TEST_CASE("stabilizer identities") {
  auto desc = PairDescriptor::full_gl2(2);
  GElem x = pure_n(desc, {Rat(1, 2), 0});
  GElem t = pure_q(desc, Mat2{1, 1, 0, 1});
  GElem m = pure_n(desc, {1, 0});
  Report r = verify_stabilizer_identities(desc, {x}, {identity(desc), m, t});
  CHECK(r.all_pass());
  auto row = [&](const GElem& h) {
    for (const auto& rec : r.records())
      if (rec.name == "stabilizer.product_form" && rec.inputs["h"] == to_string(h)) return rec.outputs["H_n"];
    return nlohmann::json();
  };
  CHECK(row(identity(desc)) == nlohmann::json::array({true, true}));
  CHECK(row(m) == nlohmann::json::array({true, true}));
  // (1,1;0,1) fixes (1/2,0), so it lies in H_n.
  CHECK(row(t) == nlohmann::json::array({true, true}));
  GElem lower = pure_q(desc, Mat2{1, 0, 1, 1});
  Report r2 = verify_stabilizer_identities(desc, {x}, {lower});
  CHECK(r2.all_pass());
  CHECK(find(r2, "stabilizer.product_form")->outputs["H_n"] == nlohmann::json::array({false, false}));

  auto heis = PairDescriptor::heisenberg();
  Rng rng(3);
  std::vector<GElem> hs;
  for (int i = 0; i < 20; ++i) hs.push_back(random_H(heis, rng));
  std::vector<GElem> xs{pure_n(heis, {0, Rat(1, 6)}), pure_q(heis, Mat2{1, Rat(1, 4), 0, 1}),
                        make_elem(heis, {Rat(1, 3), Rat(1, 2)}, Mat2{1, Rat(2, 3), 0, 1})};
  CHECK(verify_stabilizer_identities(heis, xs, hs).all_pass());
}

TEST_CASE("downward directed witnesses") {
  auto desc = PairDescriptor::full_gl2(2);
  Report r = downward_directed_check(desc, {Mat2::diag(2, 1), Mat2::diag(1, 2)});
  CHECK(r.all_pass());
  CHECK(find(r, "downward.scalar_witness", "q2", Mat2::diag(1, 2).str())->outputs["witness"] ==
        Mat2::scalar(2).str());
  Report id = downward_directed_check(desc, {Mat2::identity()});
  CHECK(find(id, "downward.scalar_witness")->outputs["witness"] == Mat2::identity().str());
  auto rat = PairDescriptor::full_gl2();
  Report r3 = downward_directed_check(rat, {Mat2{1, 1, 0, 1} * Mat2::diag(2, 1), Mat2::diag(3, 1)});
  const CheckRecord* w = nullptr;
  for (const auto& rec : r3.records())
    if (rec.inputs["q1"] != rec.inputs["q2"]) w = &rec;
  REQUIRE(w);
  CHECK(w->outputs["witness"] == Mat2::scalar(6).str());
  CHECK(downward_directed_check(PairDescriptor::heisenberg(2), {Mat2::identity()}).all_pass());
}
