#include "hecke/group/descriptor.hpp"

#include <algorithm>
#include <functional>

#include "hecke/arith/valuation.hpp"
#include "hecke/error.hpp"
#include "hecke/families/quad_units.hpp"

namespace hecke {

std::string to_string(Family f) { return f == Family::Planar ? "Planar" : "Heisenberg"; }

std::string to_string(QKind k) {
  switch (k) {
    case QKind::FullGL2: return "FullGL2";
    case QKind::QuadTorus: return "QuadTorus";
    case QKind::Unipotent: return "Unipotent";
  }
  return "?";
}

std::vector<Mat2> default_r_generators(QKind kind, long d) {
  switch (kind) {
    case QKind::FullGL2:
      return {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}, Mat2{1, 0, 0, -1}};
    case QKind::QuadTorus:
      return {Mat2::scalar(-1), fundamental_unit(d).matrix()};
    case QKind::Unipotent:
      return {Mat2{1, 1, 0, 1}};
  }
  return {};
}

PairDescriptor PairDescriptor::full_gl2(std::optional<long> p) {
  return make(Family::Planar, p, QKind::FullGL2, 0, Lattice::standard(),
              default_r_generators(QKind::FullGL2, 0));
}

PairDescriptor PairDescriptor::quad_torus(long d, std::optional<long> p) {
  std::vector<Mat2> gens;
  try {
    gens = default_r_generators(QKind::QuadTorus, d);
  } catch (const BadDiscriminant& e) {
    throw ConfigInvalid(e.what());
  }
  return make(Family::Planar, p, QKind::QuadTorus, d, Lattice::standard(), std::move(gens));
}

PairDescriptor PairDescriptor::heisenberg(std::optional<long> p) {
  return make(Family::Heisenberg, p, QKind::Unipotent, 0, Lattice::standard(),
              default_r_generators(QKind::Unipotent, 0));
}

PairDescriptor PairDescriptor::make(Family family, std::optional<long> p, QKind kind, long d,
                                    const Lattice& m, std::vector<Mat2> r_generators) {
  if (p && !is_prime(*p)) throw ConfigInvalid("p = " + std::to_string(*p) + " is not prime");
  if (family == Family::Heisenberg && kind != QKind::Unipotent)
    throw ConfigInvalid("the Heisenberg family requires Q_kind = Unipotent");
  if (family == Family::Planar && kind == QKind::Unipotent)
    throw ConfigInvalid("Q_kind = Unipotent belongs to the Heisenberg family");
  if (kind == QKind::QuadTorus) {
    if (d <= 1) throw ConfigInvalid("QuadTorus needs d > 1, got " + std::to_string(d));
    try {
      QuadInt::check_discriminant(d);
    } catch (const BadDiscriminant& e) {
      throw ConfigInvalid(e.what());
    }
  }
  if (m != Lattice::standard())
    throw ConfigInvalid("only M = Z^2 is supported, got " + m.str());
  if (r_generators.empty()) throw ConfigInvalid("R_generators must be nonempty");

  PairDescriptor desc;
  desc.family_ = family;
  desc.p_ = p;
  desc.kind_ = kind;
  desc.d_ = kind == QKind::QuadTorus ? d : 0;
  desc.m_ = m;
  desc.r_gens_ = std::move(r_generators);
  for (const auto& r : desc.r_gens_)
    if (!desc.in_R(r)) throw ConfigInvalid("R generator " + r.str() + " is not in R");
  desc.finish();
  return desc;
}

void PairDescriptor::finish() {
  r_gens_sym_.clear();
  auto push = [&](const Mat2& g) {
    if (g.is_identity()) return;
    if (std::find(r_gens_sym_.begin(), r_gens_sym_.end(), g) == r_gens_sym_.end())
      r_gens_sym_.push_back(g);
  };
  for (const auto& g : r_gens_) push(g);
  for (const auto& g : r_gens_) push(g.inverse());

  if (family_ == Family::Heisenberg)
    m_gens_ = {Vec2{0, 1}, Vec2{0, -1}};
  else
    m_gens_ = {m_.col0(), m_.col1(), -m_.col0(), -m_.col1()};

  std::string sig = name();
  for (const auto& g : r_gens_) sig += g.str();
  id_ = std::hash<std::string>{}(sig);
}

std::string PairDescriptor::name() const {
  std::string ring = p_ ? "Z[1/" + std::to_string(*p_) + "]" : "Q";
  std::string kind = to_string(kind_);
  if (kind_ == QKind::QuadTorus) kind += "(" + std::to_string(d_) + ")";
  return to_string(family_) + "/" + kind + "/" + ring;
}

bool PairDescriptor::in_base_ring(const Rat& x) const { return !p_ || in_z_1_over_p(x, *p_); }

bool PairDescriptor::in_N(const Vec2& n) const { return in_base_ring(n.x) && in_base_ring(n.y); }

bool PairDescriptor::in_Q(const Mat2& q) const {
  for (const Rat* e : {&q.a, &q.b, &q.c, &q.d})
    if (!in_base_ring(*e)) return false;
  Rat det = q.det();
  if (det.is_zero()) return false;
  if (p_ && !is_signed_p_power(det, *p_)) return false;
  switch (kind_) {
    case QKind::FullGL2: return true;
    case QKind::QuadTorus: return q.a == q.d && q.b == Rat(d_) * q.c;
    case QKind::Unipotent: return q.a == 1 && q.c.is_zero() && q.d == 1;
  }
  return false;
}

bool PairDescriptor::in_R(const Mat2& q) const {
  if (!q.is_integral()) return false;
  Rat det = q.det();
  if (det != 1 && det != -1) return false;
  return in_Q(q);
}

Vec2 PairDescriptor::normalize_n(const Vec2& n) const {
  if (family_ == Family::Heisenberg) return {n.x.frac(), n.y};
  return n;
}

}  // namespace hecke
