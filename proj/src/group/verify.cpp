#include "hecke/group/verify.hpp"

#include "hecke/error.hpp"
#include "hecke/group/stabilizers.hpp"

namespace hecke {

namespace {

using nlohmann::json;

const char* kHeckeAnchor = "Hecke criterion: [M:M_q], [R:R_q], [R:R_{n,M}] all finite";
const char* kReducedAnchor = "reducedness: M_Q = {e} and R_{N,{e}} ∩ R_Q = {e}, finite stages";
const char* kStabAnchor = "stabilizers: H_n = M R_{n,M}, H_q = M_q R_q, H_{qn} ∩ H_q = M_q (q R_{n,M} q^-1 ∩ R)";
const char* kRnLAnchor = "R_{n,M}: (r - I) n in M <=> r n r^-1 in n M <=> r in n H n^-1";
const char* kSubbaseAnchor = "N ∩ (qn) H (qn)^-1 = q M q^-1";
const char* kIntersectionAnchor = "⋂_{x in X} H_x = (⋂ M_q)(⋂ (q R_{n,M} q^-1 ∩ R)) since N ∩ Q = {e}";
const char* kDownwardAnchor = "downward directed: q1 M q1^-1 ∩ q2 M q2^-1 contains k M k^-1 for a scalar k";

std::string int_str(const Int& v) { return v.get_str(); }

CheckRecord inconclusive(std::string name, json inputs, const Error& e, const char* anchor) {
  return CheckRecord{std::move(name), std::move(inputs), json{{"error", e.what()}}, Verdict::Inconclusive, anchor};
}

// Splits x = (n_x, q) as x = q n with n = q^{-1} n_x.
Vec2 n_after_q(const GElem& x) { return x.q.inverse() * x.n; }

bool conj_in_H(const PairDescriptor& desc, const GElem& x, const GElem& h) {
  // x^{-1} h x in H, i.e. h in x H x^{-1}.
  return in_H(desc, mul(desc, mul(desc, inv(desc, x), h), x));
}

// q^{-1} r q in R with (q^{-1} r q - I) n in M, i.e. r in q R_{n,M} q^{-1}.
bool in_conj_R_nM(const PairDescriptor& desc, const Mat2& r, const Mat2& q, const Vec2& n) {
  const Mat2 c = q.inverse() * r * q;
  return desc.in_R(c) && desc.in_M(c * n - n);
}

}  // namespace

Report is_hecke_pair(const PairDescriptor& desc, const std::vector<Mat2>& samples_q,
                     const std::vector<Vec2>& samples_n, const Bounds& bounds) {
  Report report("is_hecke_pair");
  for (const auto& q : samples_q) {
    if (!desc.in_Q(q)) throw NotInQ(q.str() + " is not in Q for " + desc.name());
    json inputs{{"pair", desc.name()}, {"q", q.str()}};
    try {
      Lattice mq = M_q(desc, q);
      auto stab = stabilizer_q(desc, q, bounds);
      Int r_index(static_cast<unsigned long>(stab.r_index()));
      Int by_orbit = count_RqR_cosets(desc, q, bounds);
      json outputs{{"M_q", mq.str()},
                   {"M_index", int_str(lattice_index(desc.M(), mq))},
                   {"R_index", int_str(r_index)},
                   {"R_index_by_lattice_orbit", int_str(by_orbit)},
                   {"level", stab.r_condition.level}};
      report.add({"hecke.q", inputs, outputs, r_index == by_orbit ? Verdict::Pass : Verdict::Fail, kHeckeAnchor});
    } catch (const ConductorOverflow& e) {
      report.add(inconclusive("hecke.q", inputs, e, kHeckeAnchor));
    } catch (const EnumerationBound& e) {
      report.add(inconclusive("hecke.q", inputs, e, kHeckeAnchor));
    }
  }
  for (const auto& n : samples_n) {
    if (!desc.in_N(n)) throw NotInN(n.str() + " is not in N for " + desc.name());
    json inputs{{"pair", desc.name()}, {"n", desc.normalize_n(n).str()}};
    try {
      Int by_orbit = index_R_nM(desc, n, bounds);
      Int by_stab = index_R_nM_by_stabilizer(desc, n, bounds);
      json outputs{{"R_nM_index", int_str(by_orbit)}, {"R_nM_index_by_stabilizer", int_str(by_stab)}};
      report.add({"hecke.n", inputs, outputs, by_orbit == by_stab ? Verdict::Pass : Verdict::Fail, kHeckeAnchor});
    } catch (const ConductorOverflow& e) {
      report.add(inconclusive("hecke.n", inputs, e, kHeckeAnchor));
    } catch (const SizeCap& e) {
      report.add(inconclusive("hecke.n", inputs, e, kHeckeAnchor));
    }
  }
  return report;
}

Report reduced_check(const PairDescriptor& desc, const std::vector<std::vector<Mat2>>& stages,
                     const Bounds& bounds) {
  std::vector<ReducedStage> full;
  for (const auto& e : stages) full.push_back(ReducedStage{e, {}});
  return reduced_check(desc, full, bounds);
}

Report reduced_check(const PairDescriptor& desc, const std::vector<ReducedStage>& stages, const Bounds& bounds) {
  Report report("reduced_check");
  std::vector<std::pair<Int, Int>> indices;
  bool complete = true;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& stage = stages[k];
    json e_json = json::array(), f_json = json::array();
    for (const auto& q : stage.E) e_json.push_back(q.str());
    for (const auto& n : stage.F) f_json.push_back(n.str());
    json inputs{{"pair", desc.name()}, {"stage", k}, {"E", e_json}, {"F", f_json}};
    try {
      Lattice m_e = desc.M();
      std::vector<Vec2> f_gens{desc.M().col0(), desc.M().col1()};
      Int level = 1;
      for (const auto& q : stage.E) {
        if (!desc.in_Q(q)) throw NotInQ(q.str() + " is not in Q for " + desc.name());
        m_e = lattice_intersect(m_e, M_q(desc, q));
        const Lattice back = transform_lattice(q.inverse(), desc.M());
        f_gens.push_back(back.col0());
        f_gens.push_back(back.col1());
        level = lcm(level, Int(conductor_for_q(q)));
      }
      for (const auto& n : stage.F) {
        if (!desc.in_N(n)) throw NotInN(n.str() + " is not in N for " + desc.name());
        f_gens.push_back(n);
      }
      const Lattice f = Lattice::from_generators(f_gens);
      // (L - I) v in M_E depends on L mod s once s clears F and kills Z^2 / M_E.
      level = lcm(level, Int(f.basis().denominator_lcm() * scalar_exponent(m_e)));
      if (level > bounds.conductor_max || level > ResidueRing::kMaxModulus)
        throw ConductorOverflow("level " + level.get_str() + " exceeds bound " + std::to_string(bounds.conductor_max));
      auto group = ResidueGroup::enumerate(desc, to_long(level), bounds.residue_group_max);
      auto sub = select(group, [&](const ModMat& m) {
        const Mat2 lift = m.lift();
        for (const auto& q : stage.E)
          if (!(q.inverse() * lift * q).is_integral()) return false;
        return m_e.contains(lift * f.col0() - f.col0()) && m_e.contains(lift * f.col1() - f.col1());
      });
      auto cert = certify_subgroup(group, sub);
      Int m_index = lattice_index(desc.M(), m_e);
      Int r_index(static_cast<unsigned long>(group.size() / sub.size()));
      indices.emplace_back(m_index, r_index);
      report.add({"reduced.stage", inputs,
                  json{{"M_E", m_e.str()},
                       {"M_index", int_str(m_index)},
                       {"F", f.str()},
                       {"R_index", int_str(r_index)},
                       {"level", group.level()},
                       {"subgroup", cert.is_subgroup}},
                  cert.is_subgroup ? Verdict::Pass : Verdict::Fail, kReducedAnchor});
    } catch (const ConductorOverflow& e) {
      complete = false;
      report.add(inconclusive("reduced.stage", inputs, e, kReducedAnchor));
    }
  }

  // Least level at which no nontrivial generator reduces to the identity.
  long faithful_level = 0;
  for (long s = 2; s <= std::min<long>(bounds.conductor_max, ResidueRing::kMaxModulus) && faithful_level == 0; ++s) {
    ResidueRing ring(s);
    bool ok = true;
    for (const auto& g : desc.r_generators_symmetric())
      if (ModMat::from(g, ring) == ModMat::identity(ring)) ok = false;
    if (ok) faithful_level = s;
  }
  report.add({"reduced.action_faithful", json{{"pair", desc.name()}},
              json{{"level", faithful_level}},
              faithful_level > 0 ? Verdict::Pass : Verdict::Inconclusive, kReducedAnchor});

  bool increasing = complete && !indices.empty();
  for (std::size_t k = 0; k < indices.size() && increasing; ++k) {
    if (indices[k].first <= 1 || indices[k].second <= 1) increasing = false;
    if (k > 0 && (indices[k].first <= indices[k - 1].first || indices[k].second <= indices[k - 1].second))
      increasing = false;
  }
  bool certified = increasing && faithful_level > 0;
  std::string verdict_text =
      certified ? "reduced certified at stage " + std::to_string(indices.size() - 1) : std::string("inconclusive");
  report.add({"reduced.verdict", json{{"pair", desc.name()}, {"stages", stages.size()}},
              json{{"verdict", verdict_text}}, certified ? Verdict::Pass : Verdict::Inconclusive, kReducedAnchor});
  return report;
}

Report verify_stabilizer_identities(const PairDescriptor& desc, const std::vector<GElem>& x_samples,
                                    const std::vector<GElem>& h_samples) {
  Report report("verify_stabilizer_identities");
  for (const auto& x : x_samples) {
    const Mat2& q = x.q;
    const Vec2 n = n_after_q(x);
    const GElem n_elem = pure_n(desc, n);
    const GElem q_elem = pure_q(desc, q);
    const Lattice mq = M_q(desc, q);

    for (const auto& h : h_samples) {
      if (!in_H(desc, h)) throw Error("sample " + to_string(h) + " is not in H");
      json inputs{{"pair", desc.name()}, {"x", to_string(x)}, {"h", to_string(h)}};
      const Mat2& r = h.q;

      // H_n = M R_{n,M}.
      bool hn_group = conj_in_H(desc, n_elem, h);
      bool hn_product = desc.in_M(h.n) && in_R_nM(desc, r, n);
      // H_q = M_q R_q.
      bool hq_group = conj_in_H(desc, q_elem, h);
      bool hq_product = mq.contains(h.n) && in_R_q(desc, r, q);
      // H_{qn} ∩ H_q = M_q (q R_{n,M} q^{-1} ∩ R).
      bool hx_group = conj_in_H(desc, x, h) && hq_group;
      bool hx_product = mq.contains(h.n) && in_conj_R_nM(desc, r, q, n);
      // Equivalent descriptions of R_{n,M} on the R-part of h.
      const GElem r_elem = pure_q(desc, r);
      const GElem rnr = mul(desc, mul(desc, r_elem, n_elem), inv(desc, r_elem));
      bool rnl_linear = in_R_nM(desc, r, n);
      bool rnl_coset = rnr.q.is_identity() && desc.in_M(rnr.n - n);
      bool rnl_conj = conj_in_H(desc, n_elem, r_elem);

      json outputs{{"H_n", {hn_group, hn_product}},
                   {"H_q", {hq_group, hq_product}},
                   {"H_qn_cap_H_q", {hx_group, hx_product}},
                   {"R_nM", {rnl_linear, rnl_coset, rnl_conj}}};
      bool ok = hn_group == hn_product && hq_group == hq_product && hx_group == hx_product;
      report.add({"stabilizer.product_form", inputs, outputs, ok ? Verdict::Pass : Verdict::Fail, kStabAnchor});
      bool rnl_ok = rnl_linear == rnl_coset && rnl_coset == rnl_conj;
      report.add({"stabilizer.R_nM_equivalence", inputs, json{{"memberships", outputs["R_nM"]}},
                  rnl_ok ? Verdict::Pass : Verdict::Fail, kRnLAnchor});
    }

    // N ∩ x H x^{-1} against q M on sampled vectors inside and outside q M.
    const Lattice qm = transform_lattice(q, desc.M());
    std::size_t checked = 0, mismatches = 0;
    const Vec2 offsets[] = {{0, 0}, {Rat(1, 2), 0}, {0, Rat(1, 2)}, {Rat(1, 3), Rat(1, 3)}};
    for (long i = -2; i <= 2; ++i)
      for (long j = -2; j <= 2; ++j)
        for (const auto& off : offsets) {
          const Vec2 v = q * (Vec2{i, j} + off);
          if (!desc.in_N(v)) continue;
          ++checked;
          bool group_side = conj_in_H(desc, x, pure_n(desc, v));
          bool lattice_side = qm.contains(v);
          if (group_side != lattice_side) ++mismatches;
        }
    report.add({"subbase.N_cap_conjugate", json{{"pair", desc.name()}, {"x", to_string(x)}},
                json{{"qM", qm.str()}, {"vectors_checked", checked}, {"mismatches", mismatches}},
                mismatches == 0 ? Verdict::Pass : Verdict::Fail, kSubbaseAnchor});
  }

  // Finite intersection over X = {x} ∪ {q-part of x}: group side against product side.
  if (!x_samples.empty()) {
    json x_json = json::array();
    Lattice m_x = desc.M();
    for (const auto& x : x_samples) {
      x_json.push_back(to_string(x));
      m_x = lattice_intersect(m_x, M_q(desc, x.q));
    }
    for (const auto& h : h_samples) {
      bool group_side = true, r_side = true;
      for (const auto& x : x_samples) {
        group_side = group_side && conj_in_H(desc, x, h) && conj_in_H(desc, pure_q(desc, x.q), h);
        r_side = r_side && in_conj_R_nM(desc, h.q, x.q, n_after_q(x));
      }
      bool product_side = m_x.contains(h.n) && r_side;
      report.add({"stabilizer.finite_intersection", json{{"pair", desc.name()}, {"X", x_json}, {"h", to_string(h)}},
                  json{{"group_side", group_side}, {"product_side", product_side}},
                  group_side == product_side ? Verdict::Pass : Verdict::Fail, kIntersectionAnchor});
    }
  }
  return report;
}

Report downward_directed_check(const PairDescriptor& desc, const std::vector<Mat2>& q_samples) {
  Report report("downward_directed_check");
  if (!desc.has_scalars()) {
    // The witness is a scalar; the precondition fails for families without scalars.
    report.add({"downward.not_applicable", json{{"pair", desc.name()}},
                json{{"reason", "Q contains no nontrivial scalars"}}, Verdict::Pass, kDownwardAnchor});
    return report;
  }
  for (std::size_t i = 0; i < q_samples.size(); ++i) {
    for (std::size_t j = i; j < q_samples.size(); ++j) {
      const Mat2& q1 = q_samples[i];
      const Mat2& q2 = q_samples[j];
      json inputs{{"pair", desc.name()}, {"q1", q1.str()}, {"q2", q2.str()}};
      const Lattice meet =
          lattice_intersect(transform_lattice(q1, desc.M()), transform_lattice(q2, desc.M()));
      const Int lambda = scalar_exponent(meet);
      const Mat2 k = Mat2::scalar(Rat(lambda));
      bool in_q = desc.in_Q(k);
      bool contained = meet.contains(transform_lattice(k, desc.M()));
      report.add({"downward.scalar_witness", inputs,
                  json{{"meet", meet.str()}, {"witness", k.str()}, {"in_Q", in_q}, {"contained", contained}},
                  in_q && contained ? Verdict::Pass : Verdict::Fail, kDownwardAnchor});
    }
  }
  return report;
}

}  // namespace hecke
