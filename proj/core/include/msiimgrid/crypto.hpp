#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "msiimgrid/bytes.hpp"
#include "msiimgrid/rng.hpp"

namespace msiim {

/// RC5 with 32-bit words. Defaults to 12 rounds and a 16-byte key
/// (RC5-32/12/16). Block size is 8 bytes; words are little-endian within a
/// block, per the original definition.
class Rc5 {
 public:
  static constexpr std::size_t kBlockSize = 8;

  Rc5(const Bytes& key, int rounds = 12);

  void encrypt_block(const std::uint8_t in[kBlockSize],
                     std::uint8_t out[kBlockSize]) const;
  void decrypt_block(const std::uint8_t in[kBlockSize],
                     std::uint8_t out[kBlockSize]) const;

  int rounds() const { return rounds_; }

 private:
  int rounds_;
  std::vector<std::uint32_t> subkeys_;
};

/// Counter mode over RC5. The 8-byte counter block is
/// big_endian_u64(path_id << 32 | sequence) + block_index, so every
/// (path, sequence) pair gets a distinct keystream. Encryption and
/// decryption are the same operation.
Bytes rc5_ctr_crypt(const Bytes& key, std::uint32_t path_id, std::uint32_t sequence,
                    const Bytes& data);

/// HMAC-SHA256 (backed by OpenSSL). 32-byte tags.
Bytes hmac_sha256(const Bytes& key, const Bytes& data);
Bytes sha256(const Bytes& data);

/// Keyed MAC interface so the tag algorithm stays swappable.
class Mac {
 public:
  virtual ~Mac() = default;
  virtual Bytes compute(const Bytes& key, const Bytes& data) const = 0;
  virtual std::string name() const = 0;
};

class HmacSha256Mac final : public Mac {
 public:
  Bytes compute(const Bytes& key, const Bytes& data) const override {
    return hmac_sha256(key, data);
  }
  std::string name() const override { return "hmac-sha256"; }
};

/// Key exchange between a PDC and a CC gateway. One side calls
/// make_ephemeral, both sides derive the same secret from the peer's public
/// value.
class KeyExchange {
 public:
  struct Ephemeral {
    std::uint64_t secret;
    std::uint64_t public_value;
  };

  virtual ~KeyExchange() = default;
  virtual Ephemeral make_ephemeral(DeterministicRng& rng) const = 0;
  virtual Bytes derive_shared_key(std::uint64_t own_secret,
                                  std::uint64_t peer_public) const = 0;
  virtual std::string name() const = 0;
};

/// Classic discrete-log Diffie-Hellman over a configurable prime group.
/// Group parameters are scenario configuration; the default 61-bit prime is
/// simulation-grade, not a hardened group. The shared key is
/// SHA256(big_endian(g^ab mod p)) truncated to key_bytes.
class ModpKeyExchange final : public KeyExchange {
 public:
  ModpKeyExchange(std::uint64_t prime = kDefaultPrime, std::uint64_t generator = 5,
                  std::size_t key_bytes = 16);

  Ephemeral make_ephemeral(DeterministicRng& rng) const override;
  Bytes derive_shared_key(std::uint64_t own_secret,
                          std::uint64_t peer_public) const override;
  std::string name() const override { return "modp-dh"; }

  static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

 private:
  std::uint64_t prime_;
  std::uint64_t generator_;
  std::size_t key_bytes_;
};

/// The pluggable primitives used by the routing protocol. The "deterministic"
/// suite is the same algorithms with all randomness drawn from the run's
/// seeded stream, which is what makes golden transcripts possible.
struct CryptoSuite {
  std::shared_ptr<Mac> mac;
  std::shared_ptr<KeyExchange> kex;
  std::size_t key_bytes = 16;  // RC5 key and pairwise key length
  int rc5_rounds = 12;

  Bytes encrypt(const Bytes& key, std::uint32_t path_id, std::uint32_t sequence,
                const Bytes& plaintext) const {
    return rc5_ctr_crypt(key, path_id, sequence, plaintext);
  }
  Bytes decrypt(const Bytes& key, std::uint32_t path_id, std::uint32_t sequence,
                const Bytes& ciphertext) const {
    return rc5_ctr_crypt(key, path_id, sequence, ciphertext);
  }
  Bytes tag(const Bytes& key, const Bytes& data) const { return mac->compute(key, data); }

  static CryptoSuite deterministic();
};

}  // namespace msiim
