#include "msiimgrid/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <bit>

#include "msiimgrid/error.hpp"

namespace msiim {

namespace {

constexpr std::uint32_t kP32 = 0xB7E15163;
constexpr std::uint32_t kQ32 = 0x9E3779B9;

std::uint32_t load_le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

void store_le32(std::uint32_t v, std::uint8_t* p) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

}  // namespace

Rc5::Rc5(const Bytes& key, int rounds) : rounds_(rounds) {
  if (key.empty() || key.size() > 255)
    throw Error(ErrorCode::InvalidLength, "RC5 key must be 1..255 bytes");
  if (rounds_ < 1 || rounds_ > 255)
    throw Error(ErrorCode::InvalidLength, "RC5 rounds out of range");

  const std::size_t c = (key.size() + 3) / 4;
  std::vector<std::uint32_t> L(c, 0);
  for (std::size_t i = key.size(); i-- > 0;)
    L[i / 4] = (L[i / 4] << 8) + key[i];

  const std::size_t t = 2 * (static_cast<std::size_t>(rounds_) + 1);
  subkeys_.assign(t, 0);
  subkeys_[0] = kP32;
  for (std::size_t i = 1; i < t; ++i) subkeys_[i] = subkeys_[i - 1] + kQ32;

  std::uint32_t a = 0, b = 0;
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k < 3 * std::max(t, c); ++k) {
    a = subkeys_[i] = std::rotl(subkeys_[i] + a + b, 3);
    b = L[j] = std::rotl(L[j] + a + b, static_cast<int>((a + b) & 31));
    i = (i + 1) % t;
    j = (j + 1) % c;
  }
}

void Rc5::encrypt_block(const std::uint8_t in[kBlockSize],
                        std::uint8_t out[kBlockSize]) const {
  std::uint32_t a = load_le32(in) + subkeys_[0];
  std::uint32_t b = load_le32(in + 4) + subkeys_[1];
  for (int r = 1; r <= rounds_; ++r) {
    a = std::rotl(a ^ b, static_cast<int>(b & 31)) + subkeys_[2 * r];
    b = std::rotl(b ^ a, static_cast<int>(a & 31)) + subkeys_[2 * r + 1];
  }
  store_le32(a, out);
  store_le32(b, out + 4);
}

void Rc5::decrypt_block(const std::uint8_t in[kBlockSize],
                        std::uint8_t out[kBlockSize]) const {
  std::uint32_t a = load_le32(in);
  std::uint32_t b = load_le32(in + 4);
  for (int r = rounds_; r >= 1; --r) {
    b = std::rotr(b - subkeys_[2 * r + 1], static_cast<int>(a & 31)) ^ a;
    a = std::rotr(a - subkeys_[2 * r], static_cast<int>(b & 31)) ^ b;
  }
  store_le32(a - subkeys_[0], out);
  store_le32(b - subkeys_[1], out + 4);
}

Bytes rc5_ctr_crypt(const Bytes& key, std::uint32_t path_id, std::uint32_t sequence,
                    const Bytes& data) {
  Rc5 cipher(key);
  const std::uint64_t nonce =
      static_cast<std::uint64_t>(path_id) << 32 | sequence;
  Bytes out(data.size());
  std::uint8_t counter_block[Rc5::kBlockSize];
  std::uint8_t keystream[Rc5::kBlockSize];
  for (std::size_t off = 0, idx = 0; off < data.size(); off += Rc5::kBlockSize, ++idx) {
    std::uint64_t ctr = nonce + idx;
    for (int i = 0; i < 8; ++i)
      counter_block[i] = static_cast<std::uint8_t>(ctr >> (56 - 8 * i));
    cipher.encrypt_block(counter_block, keystream);
    std::size_t n = std::min(data.size() - off, Rc5::kBlockSize);
    for (std::size_t i = 0; i < n; ++i) out[off + i] = data[off + i] ^ keystream[i];
  }
  return out;
}

Bytes hmac_sha256(const Bytes& key, const Bytes& data) {
  Bytes out(32);
  unsigned int len = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
       data.empty() ? reinterpret_cast<const unsigned char*>("") : data.data(),
       data.size(), out.data(), &len);
  out.resize(len);
  return out;
}

Bytes sha256(const Bytes& data) {
  Bytes out(32);
  SHA256(data.empty() ? reinterpret_cast<const unsigned char*>("") : data.data(),
         data.size(), out.data());
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

ModpKeyExchange::ModpKeyExchange(std::uint64_t prime, std::uint64_t generator,
                                 std::size_t key_bytes)
    : prime_(prime), generator_(generator), key_bytes_(key_bytes) {
  if (prime_ < 5 || generator_ < 2 || generator_ >= prime_)
    throw Error(ErrorCode::InvalidScenario, "bad key-exchange group parameters");
}

KeyExchange::Ephemeral ModpKeyExchange::make_ephemeral(DeterministicRng& rng) const {
  std::uint64_t secret = 2 + rng.uniform(prime_ - 3);
  return Ephemeral{secret, powmod(generator_, secret, prime_)};
}

Bytes ModpKeyExchange::derive_shared_key(std::uint64_t own_secret,
                                         std::uint64_t peer_public) const {
  std::uint64_t shared = powmod(peer_public, own_secret, prime_);
  Bytes material;
  append_u64be(material, shared);
  Bytes digest = sha256(material);
  digest.resize(key_bytes_);
  return digest;
}

CryptoSuite CryptoSuite::deterministic() {
  CryptoSuite suite;
  suite.mac = std::make_shared<HmacSha256Mac>();
  suite.kex = std::make_shared<ModpKeyExchange>();
  return suite;
}

}  // namespace msiim
