// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/cosets/double_coset.hpp"
#include "hecke/cosets/hecke_algebra.hpp"
#include "hecke/error.hpp"
#include "hecke/families/gl2.hpp"
#include "hecke/families/heisenberg.hpp"
#include "hecke/families/quad_units.hpp"
#include "hecke/group/stabilizers.hpp"
#include "hecke/group/verify.hpp"
#include "hecke/random.hpp"
#include "hecke/tower/tower.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

struct Failure {
  std::string what;
};

#define REQUIRE(cond, msg)                                  \
  do {                                                      \
    if (!(cond)) {                                          \
      std::ostringstream os_;                               \
      os_ << __LINE__ << ": " << msg;                       \
      throw Failure{os_.str()};                             \
    }                                                       \
  } while (0)

std::size_t vector_orbit(long vx, long vy, long s) {
  const long gens[3][4] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, -1}};
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

// 1. Every index family is finite for the sampled elements and each index agrees with its cross-check.
void hecke_pair_verification() {
  auto desc = PairDescriptor::full_gl2(2);
  std::vector<Mat2> qs{Mat2::diag(2, 1), Mat2::diag(4, 2), Mat2{1, 1, 0, 1} * Mat2::diag(2, 1)};
  std::vector<Vec2> ns{{Rat(1, 2), 0}, {Rat(1, 4), Rat(1, 2)}};
  Report r = is_hecke_pair(desc, qs, ns);
  REQUIRE(r.records().size() == 5, "expected 5 records");
  REQUIRE(r.all_pass(), r.human_summary());
  for (std::size_t i = 0; i < r.records().size(); ++i) {
    const auto& rec = r.records()[i];
    if (i < qs.size()) {
      REQUIRE(rec.name == "hecke.q", "record order");
      // Each sample is a diag(2,1) class: 3 lattices of index 2 form the R-orbit of q M.
      REQUIRE(rec.outputs["R_index"] == std::to_string(oracle::sublattices_of_index(2).size()), rec.outputs.dump());
      // [M : M ∩ q M] by counting points of Z^2 ∩ q Z^2 in a box of side 8.
      Lattice qm = transform_lattice(qs[i], desc.M());
      long in_both = 0, box = 8;
      for (long x = 0; x < box; ++x)
        for (long y = 0; y < box; ++y) in_both += qm.contains(Vec2{x, y});
      REQUIRE(rec.outputs["M_index"] == std::to_string(box * box / in_both), rec.outputs.dump());
    } else {
      const Vec2& n = ns[i - qs.size()];
      long s = conductor_for_n(n);
      std::size_t orbit = vector_orbit((n.x * Rat(s)).num().get_si(), (n.y * Rat(s)).num().get_si(), s);
      REQUIRE(rec.outputs["R_nM_index"] == std::to_string(orbit), rec.outputs.dump());
    }
  }
}

// 2. L(diag(p,1)) = p(p+1) and delta = p by enumeration, by the index product and by the group-law oracle.
void double_coset_counts(long p) {
  auto desc = PairDescriptor::full_gl2(p);
  CosetEnumerator cosets(desc);
  Mat2 q = Mat2::diag(p, 1);
  GElem x = pure_q(desc, q);
  std::size_t L = cosets.L_of(x);
  REQUIRE(L == static_cast<std::size_t>(p * (p + 1)), "L = " << L);
  REQUIRE(cosets.delta(x) == Rat(p), "delta = " << cosets.delta(x).str());
  Int product = lattice_index(desc.M(), M_q(desc, q)) * index_R_q(desc, q, {});
  REQUIRE(product == static_cast<long>(L), "index product " << product.get_str());
  Int product_inv = lattice_index(desc.M(), M_q(desc, q.inverse())) * index_R_q(desc, q.inverse(), {});
  REQUIRE(product_inv == static_cast<long>(cosets.L_of(inv(desc, x))), "inverse index product");
  REQUIRE(oracle::left_reps(desc, x).size() == L, "group-law oracle");
}

// Random Hecke element with support <= 3 drawn from small double cosets.
HeckeElement random_element(CosetEnumerator& cosets, const std::vector<GElem>& pool, Rng& rng) {
  HeckeElement f(cosets.descriptor().id());
  int terms = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < terms; ++i)
    f.add(cosets, pool[rng.index(pool.size())], Rat(rng.uniform(-4, 4), rng.uniform(1, 3)));
  if (f.is_zero()) f.add(cosets, pool.front(), 1);
  return f;
}

// 3. Associativity, (f*)* = f, identity, (f*g)* = g* * f* on 50 random elements per family.
void algebra_axioms() {
  auto gl = PairDescriptor::full_gl2(2);
  auto heis = PairDescriptor::heisenberg(2);
  std::vector<std::pair<PairDescriptor, std::vector<GElem>>> families{
      {gl,
       {identity(gl), pure_q(gl, Mat2::diag(2, 1)), pure_q(gl, Mat2::diag(Rat(1, 2), 1)),
        pure_n(gl, {Rat(1, 2), 0}), pure_q(gl, Mat2::scalar(2))}},
      {heis,
       {identity(heis), pure_q(heis, Mat2{1, Rat(1, 2), 0, 1}), pure_n(heis, {Rat(1, 2), 0}),
        pure_n(heis, {0, Rat(1, 2)}), make_elem(heis, {Rat(1, 2), Rat(1, 4)}, Mat2{1, Rat(1, 2), 0, 1})}}};
  Rng rng(2024);
  for (auto& [desc, pool] : families) {
    CosetEnumerator cosets(desc);
    std::vector<HeckeElement> fs;
    for (int i = 0; i < 50; ++i) fs.push_back(random_element(cosets, pool, rng));
    HeckeElement one = hecke_identity(cosets);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& f = fs[i];
      const auto& g = fs[(i + 1) % fs.size()];
      const auto& h = fs[(i + 2) % fs.size()];
      REQUIRE(convolve(cosets, one, f) == f && convolve(cosets, f, one) == f, desc.name() << " identity " << i);
      HeckeElement fstar = involution(cosets, f);
      REQUIRE(involution(cosets, fstar) == f, desc.name() << " involution " << i);
      HeckeElement fg = convolve(cosets, f, g);
      REQUIRE(involution(cosets, fg) == convolve(cosets, involution(cosets, g), fstar),
              desc.name() << " anti-multiplicative " << i);
      REQUIRE(convolve(cosets, fg, h) == convolve(cosets, f, convolve(cosets, g, h)),
              desc.name() << " associativity " << i);
    }
  }
}

// 4. Nested stages from {diag(2,1)} and {diag(2,1), diag(4,1)}.
void tower_coherence() {
  auto desc = PairDescriptor::full_gl2(2);
  Tower tower = build_tower(desc, {Mat2::diag(2, 1), Mat2::diag(4, 1)}, 2);
  REQUIRE(tower.stages.size() == 3, "stage count");
  Report r = verify_tower(tower);
  REQUIRE(r.all_pass(), r.human_summary());
  for (const auto& stage : tower.stages) {
    REQUIRE(stage.order() == stage.m_order() * stage.R_EF().index(), "order identity");
    REQUIRE(verify_lemmas(stage).all_pass(), "lemma checks");
  }
  for (std::size_t j = 0; j < tower.maps.size(); ++j) {
    const auto& m = tower.maps[j];
    REQUIRE(m.homomorphism && m.surjective, "connecting map " << j);
    REQUIRE(m.kernel_size * tower.stages[j].order() == tower.stages[j + 1].order(), "kernel size " << j);
  }
  ConnectingMap direct = connecting_map(tower.stages[2], tower.stages[0]);
  for (std::size_t x = 0; x < direct.image.size(); ++x)
    REQUIRE(direct.image[x] == tower.maps[0].image[tower.maps[1].image[x]], "triangle at " << x);
}

// 5. Example values of the quadratic and Heisenberg families.
void example_values() {
  REQUIRE(fundamental_unit(2) == QuadInt::make(1, 1, 2), "r0 for d = 2");
  bool rejected = false;
  try {
    fundamental_unit(5);
  } catch (const BadDiscriminant&) {
    rejected = true;
  }
  REQUIRE(rejected, "d = 5 must be rejected");
  QuadUnitData gap = unit_image_gap(2, 17);
  REQUIRE(gap.proper(), "image must be proper mod 17");
  REQUIRE(!gap.in_image({4, 0}), "4 lies in the image");
  // Independent scan of ±(1+√2)^n mod 17 with plain integers.
  long a = 1, b = 0;
  for (int n = 0; n < 2 * 17 * 17; ++n) {
    REQUIRE(!((a == 4 && b == 0) || (a == 13 && b == 0)), "±(1+√2)^" << n << " = 4 mod 17");
    long na = (a + 2 * b) % 17, nb = (a + b) % 17;
    a = na;
    b = nb;
  }
  for (long n = 1; n <= 50; ++n) {
    HeisConjLattice l = heis_conj_lattice(n);
    REQUIRE(l.index == n && l.scan_agrees, "Heisenberg n = " << n);
    REQUIRE(l.lattice.contains(Vec2{0, n}) && !l.lattice.contains(Vec2{0, 1}) == (n > 1), "lattice n = " << n);
  }
}

// 6. TH decompositions of random matrices.
void th_decompositions() {
  Rng rng(99);
  const Mat2 steps[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}};
  auto word = [&] {
    Mat2 m = Mat2::identity();
    for (int i = 0; i < 6; ++i) m = m * steps[rng.index(6)];
    return m;
  };
  for (long p : {2L, 3L}) {
    for (int i = 0; i < 500; ++i) {
      Rat pa = 1, pb = 1;
      for (long k = rng.uniform(-3, 3); k > 0; --k) pa *= Rat(p);
      for (long k = rng.uniform(-3, 3); k < 0; ++k) pb /= Rat(p);
      Rat shift(rng.uniform(-9, 9), 1L << rng.uniform(0, 2));
      if (p == 3) shift = Rat(rng.uniform(-9, 9), rng.uniform(0, 1) ? 3 : 9);
      Mat2 g = word() * Mat2::diag(pa, pb) * Mat2{1, shift, 0, 1} * word();
      THCertificate c = certify(g, th_decompose_p(g, p), p);
      REQUIRE(c.ok(), "p = " << p << " g = " << g.str());
    }
  }
  for (int i = 0; i < 500; ++i) {
    Mat2 g{Rat(rng.uniform(-30, 30), rng.uniform(1, 12)), Rat(rng.uniform(-30, 30), rng.uniform(1, 12)),
           Rat(rng.uniform(-30, 30), rng.uniform(1, 12)), Rat(rng.uniform(-30, 30), rng.uniform(1, 12))};
    if (g.det().is_zero()) g = g + Mat2::identity();
    if (g.det().is_zero()) continue;
    THCertificate c = certify(g, th_decompose_global(g), std::nullopt);
    REQUIRE(c.ok(), "global g = " << g.str());
  }
}

// 7. The SL±(2,Z) generators reach every det ±1 matrix mod s.
void slpm() {
  for (long s = 1; s <= 16; ++s) {
    SlpmReport r = slpm_surjectivity(s);
    REQUIRE(r.exhaustive_count == oracle::slpm_count(s), "count mod " << s);
    REQUIRE(r.surjective() && r.closed, "image mod " << s << " has " << r.image_size);
  }
}

// 8. Lattice operations against box enumeration; Heisenberg orbits against direct iteration.
void oracle_equivalence() {
  std::vector<oracle::SubLattice> all;
  for (long D = 1; D <= 12; ++D)
    for (auto& s : oracle::sublattices_of_index(D)) all.push_back(s);
  std::vector<Lattice> lat;
  for (const auto& s : all) {
    std::vector<Vec2> gens{{s.D, 0}, {0, s.D}};
    for (auto [x, y] : s.points()) gens.push_back({x, y});
    lat.push_back(Lattice::from_generators(gens));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& s = all[i];
    for (long x = -s.D; x < 2 * s.D; ++x)
      for (long y = -s.D; y < 2 * s.D; ++y)
        REQUIRE(lat[i].contains(Vec2{x, y}) == s.contains(x, y), "membership in " << lat[i].str());
    REQUIRE(lattice_index(Lattice::standard(), lat[i]) == s.index(), "index of " << lat[i].str());
    auto [d1, d2] = smith_invariants(lat[i]);
    auto [o1, o2] = oracle::invariant_factors(s);
    REQUIRE(d1 == o1 && d2 == o2, "invariant factors of " << lat[i].str());
    REQUIRE(scalar_exponent(lat[i]) == oracle::scalar_exponent(s), "exponent of " << lat[i].str());
    REQUIRE(hnf(lat[i].basis()) == lat[i], "canonical form");
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      Lattice meet = lattice_intersect(lat[i], lat[j]);
      long meet_index = oracle::intersection_index(all[i], all[j]);
      REQUIRE(lattice_index(Lattice::standard(), meet) == meet_index, "intersection index");
      REQUIRE(lat[i].contains(meet) && lat[j].contains(meet), "intersection containment");
      Lattice join = lattice_sum(lat[i], lat[j]);
      REQUIRE(join.contains(lat[i]) && join.contains(lat[j]), "sum containment");
      REQUIRE(lattice_index(Lattice::standard(), join) * meet_index == all[i].index() * all[j].index(), "sum index");
    }
  for (long s = 1; s <= 60; ++s)
    for (long z = 0; z < s; ++z)
      for (long w = 0; w < s; ++w) {
        auto direct = oracle::heis_orbit(z, w, s);
        std::vector<std::pair<long, long>> expected(direct.begin(), direct.end());
        REQUIRE(heis_orbit(z, w, s) == expected,
                "orbit (" << z << "," << w << ") mod " << s);
      }
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 Hecke-pair verification, FullGL2 over Z[1/2]", 10, hecke_pair_verification},
      {"2 double-coset counts, p = 2", 30, [] { double_coset_counts(2); }},
      {"2 double-coset counts, p = 3", 30, [] { double_coset_counts(3); }},
      {"2 double-coset counts, p = 5", 30, [] { double_coset_counts(5); }},
      {"3 Hecke *-algebra axioms", 120, algebra_axioms},
      {"4 tower coherence", 60, tower_coherence},
      {"5 example values", 60, example_values},
      {"6 TH decompositions", 60, th_decompositions},
      {"7 SL+-(2,Z) surjectivity mod s <= 16", 120, slpm},
      {"8 oracle equivalence", 600, oracle_equivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << std::fixed << std::setprecision(2) << secs << " s)";
    if (!ok) std::cout << ": " << detail;
    std::cout << '\n';
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
  return failures == 0 ? 0 : 1;
}
