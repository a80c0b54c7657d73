#include "hecke/cosets/hecke_algebra.hpp"

#include <sstream>
#include <unordered_map>

#include "hecke/error.hpp"

namespace hecke {

Rat HeckeElement::coeff(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second.coeff;
}

void HeckeElement::add(CosetEnumerator& cosets, const GElem& x, const Rat& c) {
  if (owner_ == 0) owner_ = cosets.descriptor().id();
  if (owner_ != cosets.descriptor().id()) throw DescriptorMismatch("Hecke element belongs to another pair");
  auto dc = cosets.double_coset(x);
  add_term(dc->key, dc->rep, c);
}

void HeckeElement::add_term(const std::string& key, const GElem& rep, const Rat& c) {
  if (c.is_zero()) return;
  if (owner_ == 0) owner_ = rep.owner;
  auto [it, inserted] = terms_.try_emplace(key, Term{rep, c});
  if (inserted) return;
  it->second.coeff += c;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (owner_ != 0 && other.owner_ != 0 && owner_ != other.owner_)
    throw DescriptorMismatch("Hecke elements belong to different pairs");
  for (const auto& [key, term] : other.terms_) add_term(key, term.rep, term.coeff);
  return *this;
}

HeckeElement operator*(const Rat& s, const HeckeElement& f) {
  HeckeElement out(f.owner_);
  for (const auto& [key, term] : f.terms_) out.add_term(key, term.rep, s * term.coeff);
  return out;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  return true;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, term] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << term.coeff.str() << "*[" << key << "]";
  }
  return os.str();
}

HeckeElement characteristic(CosetEnumerator& cosets, const GElem& x, const Rat& c) {
  HeckeElement f(cosets.descriptor().id());
  f.add(cosets, x, c);
  return f;
}

HeckeElement hecke_identity(CosetEnumerator& cosets) {
  return characteristic(cosets, identity(cosets.descriptor()));
}

HeckeElement convolve(CosetEnumerator& cosets, const HeckeElement& f, const HeckeElement& g) {
  const auto& desc = cosets.descriptor();
  HeckeElement out(desc.id());
  for (const auto& [ka, ta] : f.terms()) {
    auto da = cosets.double_coset(ta.rep);
    for (const auto& [kb, tb] : g.terms()) {
      auto db = cosets.double_coset(tb.rep);
      // Number of pairs (i, j) with y_i b_j H equal to a given left coset.
      std::unordered_map<std::string, long> counts;
      std::unordered_map<std::string, GElem> witness;
      for (const auto& y : da->left_reps)
        for (const auto& b : db->left_reps) {
          GElem prod = mul(desc, y, b);
          std::string key = cosets.left_key(prod);
          if (++counts[key] == 1) witness.emplace(key, std::move(prod));
        }
      // The count is left H-invariant, hence constant on each double coset.
      std::unordered_map<std::string, long> per_double;
      for (const auto& [key, count] : counts) {
        auto dc = cosets.double_coset(witness.at(key));
        auto [it, inserted] = per_double.try_emplace(dc->key, count);
        if (!inserted && it->second != count)
          throw Error("convolution count is not constant on " + dc->key);
        if (inserted) {
          for (const auto& lk : dc->left_keys)
            if (!counts.count(lk)) throw Error("convolution misses a left coset of " + dc->key);
          out.add_term(dc->key, dc->rep, ta.coeff * tb.coeff * Rat(count));
        }
      }
    }
  }
  return out;
}

HeckeElement involution(CosetEnumerator& cosets, const HeckeElement& f) {
  const auto& desc = cosets.descriptor();
  HeckeElement out(desc.id());
  for (const auto& [key, term] : f.terms()) {
    GElem x_inv = inv(desc, term.rep);
    auto dc = cosets.double_coset(x_inv);
    out.add_term(dc->key, dc->rep, term.coeff * cosets.delta(term.rep));
  }
  return out;
}

}  // namespace hecke
