#pragma once

#include <vector>

#include "hecke/group/gelem.hpp"
#include "hecke/random.hpp"

namespace hecke {

/// Word of length <= max_len in the symmetric R generators.
Mat2 random_R(const PairDescriptor& desc, Rng& rng, int max_len = 4);
/// (m, r) with m in [-bound, bound]^2 ∩ M and r a random word.
GElem random_H(const PairDescriptor& desc, Rng& rng, long bound = 3, int max_len = 4);
/// h1 x h2 for random h1, h2 in H.
GElem random_rewrite(const PairDescriptor& desc, const GElem& x, Rng& rng);

/// Small Q and N samples for the family: p-power diagonals, unipotents and their products.
std::vector<Mat2> default_q_samples(const PairDescriptor& desc);
std::vector<Vec2> default_n_samples(const PairDescriptor& desc);

}  // namespace hecke

namespace hecke {

struct ReducedStage;
/// Nested stages E_k = {q_1, ..., q_k}, F_k = {n_1, ..., n_k} built from p-power elements, k = 1..count.
std::vector<ReducedStage> default_reduced_stages(const PairDescriptor& desc, std::size_t count = 3);

}  // namespace hecke
