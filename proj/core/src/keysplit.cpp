#include "msiimgrid/keysplit.hpp"

#include "msiimgrid/error.hpp"

namespace msiim {

Bytes KeySplit::reconstruct(const std::array<Bytes, kFragments>& fragments) {
  Bytes out = fragments[0];
  for (std::size_t i = 1; i < kFragments; ++i) out = xor_bytes(out, fragments[i]);
  return out;
}

KeySplit split_secret(DeterministicRng& rng, std::size_t length_bits) {
  if (length_bits == 0 || length_bits % 8 != 0)
    throw Error(ErrorCode::InvalidLength,
                "key length must be a positive multiple of 8 bits");
  const std::size_t n = length_bits / 8;
  const Bytes mask(n, 0xFF);

  KeySplit split;
  split.secret_key.assign(n, 0);
  for (std::size_t i = 0; i < KeySplit::kFragments; ++i) {
    split.parts[i] = rng.random_bytes(n);
    split.fragments[i] = xor_bytes(split.parts[i], mask);
    split.secret_key = xor_bytes(split.secret_key, split.parts[i]);
  }
  return split;
}

}  // namespace msiim
