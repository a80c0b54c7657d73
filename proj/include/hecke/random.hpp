#pragma once

#include <cstdint>
#include <random>

namespace hecke {

/// Seeded generator with a fixed integer mapping, so draws do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hecke
