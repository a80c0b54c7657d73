#include "hecke/families/heisenberg.hpp"

#include <algorithm>
#include <set>

#include "hecke/arith/valuation.hpp"
#include "hecke/error.hpp"
#include "hecke/group/gelem.hpp"
#include "hecke/group/stabilizers.hpp"

namespace hecke {

HeisConjLattice heis_conj_lattice(long n) {
  if (n < 1) throw Error("n must be positive, got " + std::to_string(n));
  const auto desc = PairDescriptor::heisenberg();
  const Mat2 q{1, Rat(1, n), 0, 1};
  HeisConjLattice out;
  out.lattice = M_q(desc, q);
  out.index = lattice_index(desc.M(), out.lattice);

  // (0, b) lies in x M x^{-1} exactly when x^{-1} (0, b) x lies in M.
  const GElem x = pure_q(desc, q);
  const GElem x_inv = inv(desc, x);
  out.scan_agrees = true;
  const long bound = 6 * n;
  for (long b = -bound; b <= bound; ++b) {
    const GElem m = pure_n(desc, Vec2{0, b});
    const bool by_group = in_H(desc, mul(desc, mul(desc, x_inv, m), x));
    if (by_group != out.lattice.contains(Vec2{0, b})) out.scan_agrees = false;
  }
  return out;
}

std::string to_string(OmegaAnswer a) {
  switch (a) {
    case OmegaAnswer::Yes: return "yes";
    case OmegaAnswer::No: return "no";
    case OmegaAnswer::Unknown: return "unknown";
  }
  return "?";
}

OmegaAnswer omega_membership(const HeisPoint& pt) {
  for (const auto& r : pt.z_data) {
    if (!is_prime(r.p)) throw ConfigInvalid("residue prime " + std::to_string(r.p) + " is not prime");
    if (r.K < 1) throw ConfigInvalid("residue exponent must be at least 1");
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(r.p), static_cast<unsigned long>(r.K));
    if (r.z < 0 || Int(r.z) >= pk) throw ConfigInvalid("residue " + std::to_string(r.z) + " is not reduced");
  }
  // Primes with v_p(u) < 0 are the prime factors of the denominator.
  Int den = pt.u.den();
  std::vector<long> primes;
  for (long p = 2; den > 1; ++p) {
    if (Int(p) * Int(p) > den) {
      if (!den.fits_slong_p()) throw InsufficientData("denominator prime " + den.get_str() + " is too large");
      primes.push_back(den.get_si());
      break;
    }
    if (den % p != 0) continue;
    primes.push_back(p);
    while (den % p == 0) den /= p;
  }
  OmegaAnswer answer = OmegaAnswer::Yes;
  for (long p : primes) {
    auto it = std::find_if(pt.z_data.begin(), pt.z_data.end(), [p](const auto& r) { return r.p == p; });
    if (it == pt.z_data.end()) throw InsufficientData("no residue of z at p = " + std::to_string(p));
    if (it->z == 0) answer = OmegaAnswer::Unknown;
  }
  return answer;
}

std::vector<std::pair<long, long>> heis_orbit(long z, long w, long s) {
  if (s < 1) throw Error("modulus must be positive, got " + std::to_string(s));
  auto red = [s](long x) { return ((x % s) + s) % s; };
  std::set<std::pair<long, long>> orbit;
  for (long r = 0; r < s; ++r) orbit.emplace(red(z), red(w + red(r * red(z))));
  return {orbit.begin(), orbit.end()};
}

}  // namespace hecke
