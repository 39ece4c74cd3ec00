#pragma once

#include <cstdint>
#include <random>

#include "msiimgrid/bytes.hpp"

namespace msiim {

/// Seeded RNG used for every random draw a run makes (keys, ephemerals,
/// adversary bit positions, shuffles). Uniform draws are derived from raw
/// mt19937_64 output with fixed arithmetic instead of std distributions,
/// which keeps streams identical across standard library implementations.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_() >> 32); }

  /// Uniform in [0, n). n must be > 0.
  std::uint64_t uniform(std::uint64_t n);

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01();

  Bytes random_bytes(std::size_t n);

  /// In-place Fisher-Yates shuffle.
  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace msiim
