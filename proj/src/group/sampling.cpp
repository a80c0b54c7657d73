#include "hecke/group/sampling.hpp"

namespace hecke {

Mat2 random_R(const PairDescriptor& desc, Rng& rng, int max_len) {
  const auto& gens = desc.r_generators_symmetric();
  Mat2 r = Mat2::identity();
  const long len = rng.uniform(0, max_len);
  for (long i = 0; i < len; ++i) r = r * gens[rng.index(gens.size())];
  return r;
}

GElem random_H(const PairDescriptor& desc, Rng& rng, long bound, int max_len) {
  Vec2 m{0, 0};
  const auto& mg = desc.m_generators();
  const long steps = rng.uniform(0, 2 * bound);
  for (long i = 0; i < steps; ++i) m = m + mg[rng.index(mg.size())];
  return make_elem(desc, m, random_R(desc, rng, max_len));
}

GElem random_rewrite(const PairDescriptor& desc, const GElem& x, Rng& rng) {
  return mul(desc, mul(desc, random_H(desc, rng), x), random_H(desc, rng));
}

namespace {

long sample_prime(const PairDescriptor& desc) { return desc.prime().value_or(2); }

}  // namespace

std::vector<Mat2> default_q_samples(const PairDescriptor& desc) {
  const long p = sample_prime(desc);
  const Rat rp(p);
  switch (desc.q_kind()) {
    case QKind::FullGL2:
      return {Mat2::diag(rp, 1), Mat2::diag(rp * rp, rp), Mat2{1, 1, 0, 1} * Mat2::diag(rp, 1)};
    case QKind::QuadTorus: {
      std::vector<Mat2> out{Mat2::scalar(rp)};
      // Torus elements a + b sqrt(d) of norm ±p^k with small coordinates.
      for (long b = 1; b <= 6 && out.size() < 3; ++b)
        for (long a = 0; a <= 12 && out.size() < 3; ++a) {
          Mat2 q{a, Rat(desc.d() * b), b, a};
          if (desc.in_Q(q) && !desc.in_R(q)) out.push_back(q);
        }
      return out;
    }
    case QKind::Unipotent:
      return {Mat2{1, Rat(1, p), 0, 1}, Mat2{1, Rat(1, p * p), 0, 1}, Mat2{1, Rat(p + 1, p), 0, 1}};
  }
  return {};
}

std::vector<Vec2> default_n_samples(const PairDescriptor& desc) {
  const long p = sample_prime(desc);
  if (desc.family() == Family::Heisenberg) return {Vec2{0, Rat(1, p)}, Vec2{Rat(1, p), Rat(1, p * p)}};
  return {Vec2{Rat(1, p), 0}, Vec2{Rat(1, p * p), Rat(1, p)}};
}

}  // namespace hecke

#include "hecke/group/verify.hpp"

namespace hecke {

std::vector<ReducedStage> default_reduced_stages(const PairDescriptor& desc, std::size_t count) {
  const long p = desc.prime().value_or(2);
  std::vector<ReducedStage> stages;
  ReducedStage cur;
  Rat pk = 1;
  for (std::size_t k = 1; k <= count; ++k) {
    pk *= Rat(p);
    switch (desc.q_kind()) {
      case QKind::FullGL2: cur.E.push_back(Mat2::diag(pk, 1)); break;
      case QKind::QuadTorus: cur.E.push_back(Mat2::scalar(pk)); break;
      case QKind::Unipotent: cur.E.push_back(Mat2{1, pk.inverse(), 0, 1}); break;
    }
    cur.F.push_back(desc.family() == Family::Heisenberg ? Vec2{0, pk.inverse()} : Vec2{pk.inverse(), 0});
    stages.push_back(cur);
  }
  return stages;
}

}  // namespace hecke
