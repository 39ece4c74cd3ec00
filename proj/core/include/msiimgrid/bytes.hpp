#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msiim {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& data);
Bytes from_hex(const std::string& hex);

/// XOR of two equal-length buffers.
Bytes xor_bytes(const Bytes& a, const Bytes& b);

void append_u8(Bytes& out, std::uint8_t v);
void append_u16be(Bytes& out, std::uint16_t v);
void append_u32be(Bytes& out, std::uint32_t v);
void append_u64be(Bytes& out, std::uint64_t v);
void append_lp(Bytes& out, const Bytes& field);        // u32 length prefix
void append_lp(Bytes& out, const std::string& field);  // u32 length prefix

/// Cursor for decoding the canonical layouts. Throws Error(InvalidMessage)
/// on truncation.
class ByteReader {
 public:
  explicit ByteReader(const Bytes& data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16be();
  std::uint32_t u32be();
  std::uint64_t u64be();
  Bytes lp_bytes();
  std::string lp_string();
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const;
  const Bytes& data_;
  std::size_t pos_ = 0;
};

}  // namespace msiim
