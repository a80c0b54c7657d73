#pragma once

#include <vector>

#include "hecke/bounds.hpp"
#include "hecke/group/gelem.hpp"
#include "hecke/io/report.hpp"

namespace hecke {

/// [M:M_q], [R:R_q] and [R:R_{n,M}] for every sample, each with an independent cross-check.
/// Conductor or enumeration overflow yields an inconclusive record.
Report is_hecke_pair(const PairDescriptor& desc, const std::vector<Mat2>& samples_q,
                     const std::vector<Vec2>& samples_n, const Bounds& bounds = {});

/// A finite stage for the reducedness check: Q-elements E and N-elements F.
struct ReducedStage {
  std::vector<Mat2> E;
  std::vector<Vec2> F;
};

/// Finite-stage reducedness.  For each stage, M_E = ⋂_{q in E} M_q stands in for M_Q and the
/// R-part {r in ⋂_q R_q : (r - I) v in M_E for v in F'} with F' = M + Σ q^{-1} M + Σ Z n,
/// stands in for R_{N,{e}} ∩ R_Q.  Certified when both indices exceed 1 and strictly increase
/// along the stages and some level sees every R generator act nontrivially; inconclusive otherwise.
Report reduced_check(const PairDescriptor& desc, const std::vector<ReducedStage>& stages, const Bounds& bounds = {});
/// Stages given by Q-elements only.
Report reduced_check(const PairDescriptor& desc, const std::vector<std::vector<Mat2>>& stages,
                     const Bounds& bounds = {});

/// Compares group-law memberships (h in H_n, H_q, H_{qn} ∩ H_q, ⋂ H_x) against their
/// product forms M' R', and N ∩ x H x^{-1} against q M.
Report verify_stabilizer_identities(const PairDescriptor& desc, const std::vector<GElem>& x_samples,
                                    const std::vector<GElem>& h_samples);

/// For each pair q1, q2 exhibits a scalar k = diag(l, l) in Q with k M inside q1 M ∩ q2 M.
Report downward_directed_check(const PairDescriptor& desc, const std::vector<Mat2>& q_samples);

}  // namespace hecke
