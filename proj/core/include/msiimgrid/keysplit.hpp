#pragma once

#include "msiimgrid/bytes.hpp"
#include "msiimgrid/rng.hpp"

namespace msiim {

/// XOR split of a gateway-PDC secret into four complement-masked fragments.
///
///   SK   = k_1 ^ k_2 ^ k_3 ^ k_4
///   KF_i = k_i ^ mask            (mask = all ones, same length)
///
/// With an even fragment count the masks cancel pairwise, so
/// KF_1 ^ KF_2 ^ KF_3 ^ KF_4 = SK and the PDC can rebuild the secret from
/// the four fragments alone, while any strict subset stays independent of it.
struct KeySplit {
  static constexpr std::size_t kFragments = 4;

  Bytes secret_key;
  std::array<Bytes, kFragments> parts;      // k_i
  std::array<Bytes, kFragments> fragments;  // KF_i

  /// Eq-style reconstruction: XOR of all fragments.
  static Bytes reconstruct(const std::array<Bytes, kFragments>& fragments);
};

/// Draws four uniformly random parts of length_bits and derives the secret
/// and fragments. length_bits must be a positive multiple of 8.
KeySplit split_secret(DeterministicRng& rng, std::size_t length_bits);

}  // namespace msiim
