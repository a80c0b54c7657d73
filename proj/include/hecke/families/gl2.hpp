#pragma once

#include <optional>

#include "hecke/arith/mat2.hpp"

namespace hecke {

/// g = t k with t lower triangular and k in SL±(2, Z_(p)) (p-adic case) or SL±(2, Z) (global case).
struct THDecomposition {
  Mat2 t;
  Mat2 k;
};

/// Independent checks of a decomposition.
struct THCertificate {
  bool reassembles = false;        ///< t k == g exactly
  bool t_lower_triangular = false;  ///< upper-right entry zero
  bool t_diagonal_allowed = false;  ///< diagonal in ±p^Z (p-adic) or nonzero (global)
  bool k_integral = false;          ///< val_p >= 0 entrywise (p-adic) or integer entries (global)
  bool k_det_unit = false;          ///< det k = ±1

  bool ok() const { return reassembles && t_lower_triangular && t_diagonal_allowed && k_integral && k_det_unit; }
};

/// Decomposition over Z[1/p] following the three cases b = 0, a = 0, and both nonzero
/// (with a swap by (0,1;-1,0) when v_p(a) < v_p(b)).  The lower-left entry of t is then
/// split so that t has entries in Z[1/p].  Throws DetNotAllowed unless det g in ±p^Z.
THDecomposition th_decompose_p(const Mat2& g, long p);
/// Global decomposition by an integral column reduction of the first row.  Throws SingularBasis.
THDecomposition th_decompose_global(const Mat2& g);

/// p empty selects the global conditions.
THCertificate certify(const Mat2& g, const THDecomposition& dec, std::optional<long> p);

/// The subgroup generated by the SL±(2,Z) generators inside 2x2 matrices mod s, against
/// the exhaustive count of matrices with det = ±1 mod s.
struct SlpmReport {
  long s = 1;
  std::size_t image_size = 0;
  std::size_t exhaustive_count = 0;
  bool closed = false;                 ///< inverses and generator products stay in the image
  bool contains_reflection = false;    ///< diag(1,-1) mod s is in the image
  bool surjective() const { return image_size == exhaustive_count; }
};
/// Throws SizeCap for s > 64.
SlpmReport slpm_surjectivity(long s);

}  // namespace hecke
