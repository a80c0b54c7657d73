#pragma once

#include <utility>
#include <vector>

#include "hecke/arith/lattice.hpp"

namespace hecke {

/// M ∩ x M x^{-1} for x = [[1, 1/n], [0, 1]] in the Heisenberg pair, as {0} x index Z.
struct HeisConjLattice {
  Lattice lattice;   ///< lifted to Q^2, contains Z x {0}
  Int index = 1;     ///< [M : M ∩ x M x^{-1}]
  bool scan_agrees = false;  ///< direct membership scan of (0, b) matches the lattice
};
/// Throws Error for n < 1.
HeisConjLattice heis_conj_lattice(long n);

/// Residue data for a point (z, u) with z in the profinite integers and u in the finite adeles.
struct HeisPoint {
  struct Residue {
    long p;  ///< prime
    long K;  ///< exponent, >= 1
    long z;  ///< z mod p^K, reduced
  };
  std::vector<Residue> z_data;
  Rat u;
  Rat w;
};

/// "No" is never produced: z_p = 0 cannot be certified from finitely many residues.
enum class OmegaAnswer { Yes, No, Unknown };
std::string to_string(OmegaAnswer a);

/// Yes when every prime with v_p(u) < 0 has z != 0 mod p^K, Unknown otherwise.
/// Throws InsufficientData when such a prime has no residue, ConfigInvalid on malformed residues.
OmegaAnswer omega_membership(const HeisPoint& pt);

/// {(z, w + r z mod s) : r in Z/s}, sorted.  Throws Error for s < 1.
std::vector<std::pair<long, long>> heis_orbit(long z, long w, long s);

}  // namespace hecke
