#include "hecke/families/gl2.hpp"

#include <unordered_set>
#include <vector>

#include "hecke/arith/residue.hpp"
#include "hecke/arith/valuation.hpp"
#include "hecke/error.hpp"

namespace hecke {

namespace {

const Mat2 kJ{0, 1, -1, 0};

Rat p_power(long p, long e) {
  Rat out = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= Rat(p);
  return e < 0 ? out.inverse() : out;
}

// x = y + z with y in Z[1/p] and z p-integral.
std::pair<Rat, Rat> split_p(const Rat& x, long p) {
  Valuation v = val_p(x, p);
  if (v.at_least(0)) return {Rat(0), x};
  const long a = -v.value();
  Int pa = 1;
  for (long i = 0; i < a; ++i) pa *= p;
  // x = n / (p^a m) with gcd(m, p) = 1; y = Y / p^a with Y = n m^{-1} mod p^a.
  const Int m = x.den() / pa;
  Int m_inv;
  mpz_invert(m_inv.get_mpz_t(), m.get_mpz_t(), pa.get_mpz_t());
  const Int y_num = mod(x.num() * m_inv, pa);
  Rat y(y_num, pa);
  return {y, x - y};
}

// det g > 0, entries p-integral.
THDecomposition decompose_positive(const Mat2& g, long p) {
  if (g.b.is_zero()) return {g, Mat2::identity()};
  if (g.a.is_zero()) return {Mat2{g.b, 0, g.d, -g.c}, kJ};
  const long m = val_p(g.a, p).value();
  const long n = val_p(g.b, p).value();
  if (m < n) {
    // g = (g J^{-1}) J and g J^{-1} = (b, -a; d, -c) has the valuations in the right order.
    auto inner = decompose_positive(g * kJ.inverse(), p);
    return {inner.t, inner.k * kJ};
  }
  const Rat pn = p_power(p, n);
  const Rat v = g.b / pn;
  Mat2 t{pn, 0, g.d / v, g.det() / pn};
  Mat2 k{g.a / pn, v, -v.inverse(), 0};
  return {t, k};
}

}  // namespace

THDecomposition th_decompose_p(const Mat2& g, long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const Rat det = g.det();
  if (det.is_zero() || !is_signed_p_power(det, p))
    throw DetNotAllowed("det " + det.str() + " is not in ±" + std::to_string(p) + "^Z");
  for (const Rat* e : {&g.a, &g.b, &g.c, &g.d})
    if (!in_z_1_over_p(*e, p)) throw DetNotAllowed("entry " + e->str() + " is not in Z[1/" + std::to_string(p) + "]");

  // g = p^{-j} g0 with g0 primitive p-integral.
  const long j = -val_p(g, p).value();
  const Mat2 g0 = p_power(p, j) * g;
  const bool flip = g0.det().sign() < 0;
  const Mat2 reflection = Mat2::diag(1, -1);
  THDecomposition dec = decompose_positive(flip ? g0 * reflection : g0, p);
  if (flip) dec.k = dec.k * reflection;
  dec.t = p_power(p, -j) * dec.t;

  // Move the p-integral part of the lower-left entry into k.
  const Rat& delta = dec.t.d;
  auto [y, z] = split_p(dec.t.c / delta, p);
  dec.t.c = delta * y;
  dec.k = Mat2{1, 0, z, 1} * dec.k;
  return dec;
}

THDecomposition th_decompose_global(const Mat2& g) {
  if (g.det().is_zero()) throw SingularBasis("matrix " + g.str() + " is singular");
  if (g.is_integral() && (g.det() == 1 || g.det() == -1)) return {Mat2::identity(), g};
  // Clear denominators of the first row, then (A, B) U = (G, 0) with U unimodular.
  const Int l = lcm(g.a.den(), g.b.den());
  const Int A = (g.a * Rat(l)).num(), B = (g.b * Rat(l)).num();
  Int G, u, v;
  mpz_gcdext(G.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  const Int b_g = -B / G, a_g = A / G;
  const Mat2 U{Rat(u), Rat(b_g), Rat(v), Rat(a_g)};
  return {g * U, U.inverse()};
}

THCertificate certify(const Mat2& g, const THDecomposition& dec, std::optional<long> p) {
  THCertificate cert;
  cert.reassembles = dec.t * dec.k == g;
  cert.t_lower_triangular = dec.t.b.is_zero();
  const Rat det_k = dec.k.det();
  cert.k_det_unit = det_k == 1 || det_k == -1;
  if (p) {
    cert.t_diagonal_allowed = is_signed_p_power(dec.t.a, *p) && is_signed_p_power(dec.t.d, *p);
    cert.k_integral = val_p(dec.k, *p).at_least(0);
  } else {
    cert.t_diagonal_allowed = !dec.t.a.is_zero() && !dec.t.d.is_zero();
    cert.k_integral = dec.k.is_integral();
  }
  return cert;
}

SlpmReport slpm_surjectivity(long s) {
  if (s < 1) throw Error("modulus must be positive");
  if (s > 64) throw SizeCap("slpm_surjectivity is limited to s <= 64, got " + std::to_string(s));
  SlpmReport report;
  report.s = s;
  const ResidueRing ring(s);
  const std::vector<Mat2> gens{Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}, Mat2::diag(1, -1), Mat2{1, -1, 0, 1},
                               Mat2{1, 0, -1, 1}};
  std::vector<ModMat> mod_gens;
  for (const auto& g : gens) mod_gens.push_back(ModMat::from(g, ring));

  const ModMat id = ModMat::identity(ring);
  std::unordered_set<std::uint64_t> image{id.key()};
  std::vector<ModMat> queue{id};
  for (std::size_t pos = 0; pos < queue.size(); ++pos)
    for (const auto& g : mod_gens) {
      ModMat next = mul(queue[pos], g, ring);
      if (image.insert(next.key()).second) queue.push_back(next);
    }
  report.image_size = image.size();

  const long one = ring.reduce(1), minus_one = ring.reduce(-1);
  for (long a = 0; a < s; ++a)
    for (long b = 0; b < s; ++b)
      for (long c = 0; c < s; ++c)
        for (long d = 0; d < s; ++d) {
          long det_value = ring.reduce(a * d - b * c);
          if (det_value == one || det_value == minus_one) ++report.exhaustive_count;
        }

  report.closed = true;
  for (const auto& x : queue) {
    // Inverse of a det ±1 matrix: det * adjugate.
    long dt = det(x, ring);
    ModMat inv{{ring.mul(dt, x.e[3]), ring.mul(dt, ring.reduce(-x.e[1])), ring.mul(dt, ring.reduce(-x.e[2])),
                ring.mul(dt, x.e[0])}};
    if (!image.count(inv.key())) report.closed = false;
    for (const auto& g : mod_gens)
      if (!image.count(mul(g, x, ring).key())) report.closed = false;
  }
  report.contains_reflection = image.count(ModMat::from(Mat2::diag(1, -1), ring).key()) > 0;
  return report;
}

}  // namespace hecke
