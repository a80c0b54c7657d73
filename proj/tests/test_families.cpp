#include <doctest.h>

#include "hecke/arith/valuation.hpp"
#include "hecke/error.hpp"
#include "hecke/families/gl2.hpp"
#include "hecke/families/heisenberg.hpp"
#include "hecke/families/quad_units.hpp"
#include "hecke/random.hpp"
#include "oracles.hpp"

using namespace hecke;

TEST_CASE("fundamental units") {
  CHECK(fundamental_unit(2) == QuadInt::make(1, 1, 2));
  CHECK(fundamental_unit(3) == QuadInt::make(2, 1, 3));
  CHECK_THROWS_AS(fundamental_unit(5), BadDiscriminant);
  CHECK_THROWS_AS(fundamental_unit(4), BadDiscriminant);
  for (long d = 2; d <= 60; ++d) {
    if (!is_squarefree(d) || d % 4 == 1) continue;
    auto [m, n] = oracle::pell_unit(d);
    QuadInt u = fundamental_unit(d);
    REQUIRE(u.m == m);
    REQUIRE(u.n == n);
  }
}

TEST_CASE("unit orders") {
  QuadInt r0 = fundamental_unit(2);
  CHECK(unit_order_mod(r0, 2) == 2);
  CHECK(unit_order_mod(r0, 3) == 8);
  CHECK(unit_order_mod(QuadInt::make(7, 4, 3), 2) == 1);
  CHECK(unit_order_mod(QuadInt::make(3, 0, 2), 2) == 1);
  for (long d : {2L, 3L, 6L, 7L})
    for (long s = 2; s <= 40; ++s) {
      QuadInt u = fundamental_unit(d);
      REQUIRE(unit_order_mod(u, s) == oracle::unit_order(u.m.get_si(), u.n.get_si(), d, s));
    }
}

TEST_CASE("unit image gap") {
  QuadUnitData gap = unit_image_gap(2, 17);
  CHECK(gap.proper());
  CHECK(gap.witness().has_value());
  CHECK_FALSE(gap.in_image({4, 0}));
  CHECK(gap.full_units.size() % gap.unit_image.size() == 0);

  QuadUnitData two = unit_image_gap(2, 2);
  // Units of Z/2[sqrt 2] among its four elements: m odd.
  CHECK(two.full_units == std::vector<ResiduePair>{{1, 0}, {1, 1}});
  for (long s = 2; s <= 30; ++s) {
    QuadUnitData g = unit_image_gap(3, s);
    REQUIRE(g.full_units.size() % g.unit_image.size() == 0);
  }
}

TEST_CASE("p-adic TH decomposition examples") {
  for (long p : {2L, 3L}) {
    Mat2 g = Mat2::diag(p, 1);
    auto dec = th_decompose_p(g, p);
    CHECK(dec.t == g);
    CHECK(dec.k == Mat2::identity());
    Mat2 w{0, 1, -1, 0};
    auto dw = th_decompose_p(w, p);
    CHECK(dw.t == Mat2::identity());
    CHECK(dw.k == w);
    Mat2 u{1, Rat(1, p), 0, 1};
    auto du = th_decompose_p(u, p);
    CHECK(du.t * du.k == u);
    CHECK(certify(u, du, p).ok());
  }
  auto d2 = th_decompose_p(Mat2{1, Rat(1, 2), 0, 1}, 2);
  CHECK(d2.t == Mat2{Rat(1, 2), 0, 1, 2});
  CHECK(d2.k == Mat2{2, 1, -1, 0});
  CHECK_THROWS_AS(th_decompose_p(Mat2::diag(3, 1), 2), DetNotAllowed);
}

TEST_CASE("global TH decomposition examples") {
  Mat2 w{2, 1, 1, 1};
  auto dw = th_decompose_global(w);
  CHECK(dw.t == Mat2::identity());
  CHECK(dw.k == w);
  auto d6 = th_decompose_global(Mat2::diag(6, 1));
  CHECK(d6.t == Mat2::diag(6, 1));
  CHECK(d6.k == Mat2::identity());
  Mat2 u{1, Rat(1, 6), 0, 1};
  CHECK(certify(u, th_decompose_global(u), std::nullopt).ok());
  CHECK_THROWS_AS(th_decompose_global(Mat2{1, 2, 2, 4}), SingularBasis);
}

TEST_CASE("TH decomposition on random matrices") {
  Rng rng(5);
  for (long p : {2L, 3L, 5L})
    for (int i = 0; i < 200; ++i) {
      Mat2 g{Rat(rng.uniform(-20, 20), 1L << rng.uniform(0, 3)), Rat(rng.uniform(-20, 20)),
             Rat(rng.uniform(-20, 20)), Rat(rng.uniform(-20, 20))};
      if (g.det().is_zero() || !is_signed_p_power(g.det(), p)) continue;
      if (p != 2 && !g.is_integral()) continue;
      REQUIRE(certify(g, th_decompose_p(g, p), p).ok());
    }
  for (int i = 0; i < 300; ++i) {
    Mat2 g{Rat(rng.uniform(-9, 9), rng.uniform(1, 6)), Rat(rng.uniform(-9, 9), rng.uniform(1, 6)),
           Rat(rng.uniform(-9, 9), rng.uniform(1, 6)), Rat(rng.uniform(-9, 9), rng.uniform(1, 6))};
    if (g.det().is_zero()) continue;
    REQUIRE(certify(g, th_decompose_global(g), std::nullopt).ok());
  }
}

TEST_CASE("certificates detect bad decompositions") {
  Mat2 g{1, Rat(1, 2), 0, 1};
  THDecomposition bad{Mat2::identity(), g};
  auto cert = certify(g, bad, 2);
  CHECK(cert.reassembles);
  CHECK_FALSE(cert.k_integral);
  CHECK_FALSE(cert.ok());
}

TEST_CASE("SL+-(2,Z) surjects mod s") {
  CHECK(slpm_surjectivity(1).image_size == 1);
  CHECK(slpm_surjectivity(2).image_size == 6);
  CHECK(slpm_surjectivity(3).image_size == 48);
  for (long s = 1; s <= 12; ++s) {
    auto r = slpm_surjectivity(s);
    REQUIRE(r.exhaustive_count == oracle::slpm_count(s));
    REQUIRE(r.surjective());
    REQUIRE(r.closed);
  }
  CHECK_THROWS_AS(slpm_surjectivity(65), SizeCap);
}

TEST_CASE("Heisenberg conjugate lattices") {
  auto one = heis_conj_lattice(1);
  CHECK(one.index == 1);
  auto six = heis_conj_lattice(6);
  CHECK(six.index == 6);
  CHECK(six.scan_agrees);
  for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(heis_conj_lattice(p).index == p);
  CHECK_THROWS(heis_conj_lattice(0));
}

TEST_CASE("omega membership") {
  HeisPoint integral{{}, Rat(5), Rat(0)};
  CHECK(omega_membership(integral) == OmegaAnswer::Yes);
  HeisPoint yes{{{3, 2, 2}}, Rat(1, 3), Rat(0)};
  CHECK(omega_membership(yes) == OmegaAnswer::Yes);
  HeisPoint unknown{{{3, 2, 0}}, Rat(1, 3), Rat(0)};
  CHECK(omega_membership(unknown) == OmegaAnswer::Unknown);
  HeisPoint missing{{}, Rat(1, 3), Rat(0)};
  CHECK_THROWS_AS(omega_membership(missing), InsufficientData);
  HeisPoint malformed{{{4, 2, 1}}, Rat(1, 3), Rat(0)};
  CHECK_THROWS_AS(omega_membership(malformed), ConfigInvalid);
}

TEST_CASE("Heisenberg orbits") {
  CHECK(heis_orbit(0, 4, 7) == std::vector<std::pair<long, long>>{{0, 4}});
  CHECK(heis_orbit(2, 1, 6) == std::vector<std::pair<long, long>>{{2, 1}, {2, 3}, {2, 5}});
  CHECK(heis_orbit(5, 0, 12).size() == 12);
  for (long s = 1; s <= 30; ++s)
    for (long z = 0; z < s; ++z)
      for (long w = 0; w < s; w += 3) {
        auto got = heis_orbit(z, w, s);
        auto expected = oracle::heis_orbit(z, w, s);
        REQUIRE(std::vector<std::pair<long, long>>(expected.begin(), expected.end()) == got);
      }
  CHECK_THROWS(heis_orbit(1, 1, 0));
}
