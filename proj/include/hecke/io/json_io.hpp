#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/bounds.hpp"
#include "hecke/cosets/hecke_algebra.hpp"
#include "json.hpp"

namespace hecke {

/// A pair configuration with optional bounds and samples.
struct PairConfig {
  PairDescriptor desc = PairDescriptor::full_gl2(2);
  Bounds bounds;
  std::vector<Mat2> sample_q;
  std::vector<Vec2> sample_n;
  std::size_t sample_h = 6;
};

/// {"family","base_ring","p","Q_kind","d","M_basis","R_generators"} plus optional
/// "bounds" {coset_enum_max, conductor_max, stage_order_max, residue_group_max} and
/// "samples" {"q": [...], "n": [...], "h": count}.  Throws ConfigInvalid naming the field.
PairConfig config_from_json(const nlohmann::json& j);
PairConfig load_config(const std::string& path);
nlohmann::json config_to_json(const PairConfig& config);

/// {"n": [x, y], "q": [[a,b],[c,d]]}; for the Heisenberg family q may be one rational t for [[1,t],[0,1]].
GElem gelem_from_json(const PairDescriptor& desc, const nlohmann::json& j);
nlohmann::json gelem_to_json(const PairDescriptor& desc, const GElem& x);

/// {"terms": [{"rep": GElem, "coeff": "num/den"}]}.
HeckeElement hecke_from_json(CosetEnumerator& cosets, const nlohmann::json& j);
nlohmann::json hecke_to_json(const PairDescriptor& desc, const HeckeElement& f);

/// Reads a whole file; throws ConfigInvalid when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hecke
