#include "hecke/arith/lattice.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

struct IVec {
  Int x, y;
};

// Extended gcd with g >= 0 and u*a + v*b = g.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

Lattice Lattice::scaled(const Rat& k) {
  if (k.sign() <= 0) throw SingularBasis("scale factor must be positive");
  return Lattice(k, 0, k);
}

Lattice Lattice::from_basis(const Mat2& basis) {
  if (basis.det().is_zero()) throw SingularBasis("basis " + basis.str() + " has zero determinant");
  const Vec2 cols[2] = {basis.col0(), basis.col1()};
  return from_generators(cols);
}

Lattice Lattice::from_generators(std::span<const Vec2> gens) {
  Int scale = 1;
  for (const auto& g : gens) scale = lcm(scale, lcm(g.x.den(), g.y.den()));

  // Column echelon on the integer images: fold every generator into a single
  // pivot with first coordinate gcd(...), the rest have first coordinate 0.
  bool have_pivot = false;
  IVec pivot;
  Int second = 0;
  for (const auto& g : gens) {
    IVec v{(g.x * Rat(scale)).num(), (g.y * Rat(scale)).num()};
    if (!have_pivot) {
      pivot = v;
      have_pivot = true;
      continue;
    }
    if (v.x == 0) {
      second = gcd(second, v.y);
      continue;
    }
    Int gg, u, w;
    ext_gcd(pivot.x, v.x, gg, u, w);
    Int px = pivot.x / gg, vx = v.x / gg;
    IVec np{gg, u * pivot.y + w * v.y};
    Int rest_y = px * v.y - vx * pivot.y;
    pivot = np;
    second = gcd(second, rest_y);
  }
  if (!have_pivot) throw SingularBasis("empty generating set");
  if (pivot.x < 0) {
    pivot.x = -pivot.x;
    pivot.y = -pivot.y;
  }
  if (pivot.x == 0) {
    // All first coordinates vanish: the span is not full rank.
    throw SingularBasis("generators do not span a full-rank lattice");
  }
  if (second == 0) throw SingularBasis("generators do not span a full-rank lattice");
  Int c = mod(pivot.y, second);
  Rat s(scale);
  return Lattice(Rat(pivot.x) / s, Rat(c) / s, Rat(second) / s);
}

bool Lattice::contains(const Vec2& v) const {
  Rat k = v.x / a_;
  if (!k.is_integer()) return false;
  return ((v.y - k * c_) / d_).is_integer();
}

Vec2 Lattice::reduce(const Vec2& v) const {
  Int k = (v.x / a_).floor();
  Vec2 r{v.x - Rat(k) * a_, v.y - Rat(k) * c_};
  Int j = (r.y / d_).floor();
  r.y -= Rat(j) * d_;
  return r;
}

Lattice Lattice::dual() const { return Lattice::from_basis(basis().inverse().transpose()); }

Lattice hnf(const Mat2& raw_basis) { return Lattice::from_basis(raw_basis); }

Lattice lattice_intersect(const Lattice& l1, const Lattice& l2) {
  if (l1 == l2) return l1;
  // Clear denominators to a common scale, then (A ∩ B) = (A* + B*)*.
  Int scale = lcm(l1.basis().denominator_lcm(), l2.basis().denominator_lcm());
  Rat s(scale);
  Lattice a = transform_lattice(Mat2::scalar(s), l1);
  Lattice b = transform_lattice(Mat2::scalar(s), l2);
  Lattice meet = lattice_sum(a.dual(), b.dual()).dual();
  return transform_lattice(Mat2::scalar(s.inverse()), meet);
}

Lattice lattice_sum(const Lattice& l1, const Lattice& l2) {
  const Vec2 gens[4] = {l1.col0(), l1.col1(), l2.col0(), l2.col1()};
  return Lattice::from_generators(gens);
}

Int lattice_index(const Lattice& big, const Lattice& small) {
  if (!big.contains(small))
    throw NotSublattice(small.str() + " is not contained in " + big.str());
  Rat ratio = small.det() / big.det();
  if (!ratio.is_integer()) throw NotSublattice("non-integral determinant ratio");  // unreachable for sublattices
  return ratio.num();
}

Lattice transform_lattice(const Mat2& q, const Lattice& l) {
  if (q.det().is_zero()) throw SingularBasis("transform " + q.str() + " is singular");
  return Lattice::from_basis(q * l.basis());
}

std::pair<Int, Int> smith_invariants(const Lattice& l) {
  if (!Lattice::standard().contains(l))
    throw NotSublattice(l.str() + " is not contained in Z^2");
  Int a = l.a().num(), c = l.c().num(), d = l.d().num();
  Int d1 = gcd(gcd(a, c), d);
  return {d1, a * d / d1};
}

Int scalar_exponent(const Lattice& l) { return l.basis().inverse().denominator_lcm(); }

}  // namespace hecke
