#pragma once

#include <cstddef>

namespace hecke {

/// Enumeration limits.  Exceeding one raises an explicit error; nothing is approximated.
struct Bounds {
  std::size_t coset_enum_max = 100000;   ///< left cosets per double coset
  long conductor_max = 4096;             ///< largest level s for R / R(s)
  std::size_t residue_group_max = 1000000;  ///< |R / R(s)|
  std::size_t stage_order_max = 1000000;    ///< |M/M_E x| R/R^E_F|
};

}  // namespace hecke
