#include "msiimgrid/rng.hpp"

namespace msiim {

std::uint64_t DeterministicRng::uniform(std::uint64_t n) {
  // Rejection sampling over the low bits; unbiased and portable.
  if (n == 0) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double DeterministicRng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Bytes DeterministicRng::random_bytes(std::size_t n) {
  Bytes out(n);
  std::size_t i = 0;
  while (i < n) {
    std::uint64_t x = engine_();
    for (int b = 0; b < 8 && i < n; ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(x >> (8 * b));
    }
  }
  return out;
}

}  // namespace msiim
