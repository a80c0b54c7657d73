#include "hecke/group/gelem.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

void check_owner(const PairDescriptor& desc, const GElem& x) {
  if (x.owner != desc.id())
    throw DescriptorMismatch("element " + to_string(x) + " does not belong to " + desc.name());
}

}  // namespace

GElem make_elem(const PairDescriptor& desc, const Vec2& n, const Mat2& q) {
  if (!desc.in_N(n)) throw NotInN(n.str() + " is not in N for " + desc.name());
  if (!desc.in_Q(q)) throw NotInQ(q.str() + " is not in Q for " + desc.name());
  return GElem{desc.normalize_n(n), q, desc.id()};
}

GElem identity(const PairDescriptor& desc) { return GElem{Vec2{0, 0}, Mat2::identity(), desc.id()}; }

GElem pure_n(const PairDescriptor& desc, const Vec2& n) { return make_elem(desc, n, Mat2::identity()); }

GElem pure_q(const PairDescriptor& desc, const Mat2& q) { return make_elem(desc, Vec2{0, 0}, q); }

GElem mul(const PairDescriptor& desc, const GElem& x, const GElem& y) {
  check_owner(desc, x);
  check_owner(desc, y);
  return GElem{desc.normalize_n(x.n + x.q * y.n), x.q * y.q, desc.id()};
}

GElem inv(const PairDescriptor& desc, const GElem& x) {
  check_owner(desc, x);
  Mat2 qi = x.q.inverse();
  if (!desc.in_Q(qi)) throw NotInQ("inverse of " + x.q.str() + " leaves Q");
  return GElem{desc.normalize_n(-(qi * x.n)), qi, desc.id()};
}

bool in_H(const PairDescriptor& desc, const GElem& x) {
  check_owner(desc, x);
  return desc.in_M(x.n) && desc.in_R(x.q);
}

std::string to_string(const GElem& x) { return "(" + x.n.str() + "; " + x.q.str() + ")"; }

}  // namespace hecke
