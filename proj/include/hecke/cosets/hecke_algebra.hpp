#pragma once

#include <map>
#include <string>

#include "hecke/cosets/double_coset.hpp"

namespace hecke {

/// Finitely supported H-bi-invariant function on G with rational values,
/// stored as double-coset key -> (canonical representative, coefficient).
class HeckeElement {
 public:
  struct Term {
    GElem rep;
    Rat coeff;
  };

  HeckeElement() = default;
  explicit HeckeElement(std::uint64_t owner) : owner_(owner) {}

  std::uint64_t owner() const { return owner_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  /// Coefficient at the double coset with this key (0 off the support).
  Rat coeff(const std::string& key) const;

  /// Adds c * chi_{H x H}; zero coefficients are dropped.
  void add(CosetEnumerator& cosets, const GElem& x, const Rat& c);
  void add_term(const std::string& key, const GElem& rep, const Rat& c);

  HeckeElement& operator+=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const Rat& s, const HeckeElement& f);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// "c*[key] + ..." in key order.
  std::string str() const;

 private:
  std::uint64_t owner_ = 0;
  std::map<std::string, Term> terms_;
};

/// c * chi_{H x H}.
HeckeElement characteristic(CosetEnumerator& cosets, const GElem& x, const Rat& c = 1);
/// chi_H, the unit of the algebra.
HeckeElement hecke_identity(CosetEnumerator& cosets);

/// (f * g)(x) = Σ_{yH} f(y) g(y^{-1} x), computed by counting the products of left
/// representatives y_i b_j per left coset.  Throws EnumerationBound.
HeckeElement convolve(CosetEnumerator& cosets, const HeckeElement& f, const HeckeElement& g);
/// f^*(x) = f(x^{-1}) Δ(x^{-1}).
HeckeElement involution(CosetEnumerator& cosets, const HeckeElement& f);

}  // namespace hecke
