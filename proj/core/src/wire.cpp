#include "msiimgrid/wire.hpp"

#include "msiimgrid/error.hpp"

namespace msiim {

namespace {

void expect_type(ByteReader& r, WireType expected) {
  auto got = static_cast<WireType>(r.u8());
  if (got != expected)
    throw Error(ErrorCode::InvalidMessage, "unexpected wire record type");
}

std::vector<std::pair<std::string, StateValue>> read_state_list(ByteReader& r) {
  std::uint16_t n = r.u16be();
  std::vector<std::pair<std::string, StateValue>> out;
  out.reserve(n);
  for (std::uint16_t i = 0; i < n; ++i) {
    std::string id = r.lp_string();
    StateValue v = state_from_int(r.u8());
    out.emplace_back(std::move(id), v);
  }
  return out;
}

void write_state_list(Bytes& out,
                      const std::vector<std::pair<std::string, StateValue>>& list) {
  append_u16be(out, static_cast<std::uint16_t>(list.size()));
  for (const auto& [id, v] : list) {
    append_lp(out, id);
    append_u8(out, static_cast<std::uint8_t>(v));
  }
}

}  // namespace

Bytes DataFragmentMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::DataFragment));
  append_u32be(out, path_id);
  append_u32be(out, sequence);
  append_lp(out, edf);
  append_lp(out, inner_tag);
  append_lp(out, middle_tag);
  append_lp(out, outer_tag);
  return out;
}

DataFragmentMessage DataFragmentMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::DataFragment);
  DataFragmentMessage m;
  m.path_id = r.u32be();
  m.sequence = r.u32be();
  m.edf = r.lp_bytes();
  m.inner_tag = r.lp_bytes();
  m.middle_tag = r.lp_bytes();
  m.outer_tag = r.lp_bytes();
  return m;
}

Bytes KeyFragmentMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::KeyFragment));
  append_u32be(out, path_id);
  append_u8(out, fragment_index);
  append_lp(out, ciphertext);
  append_lp(out, mac);
  return out;
}

KeyFragmentMessage KeyFragmentMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::KeyFragment);
  KeyFragmentMessage m;
  m.path_id = r.u32be();
  m.fragment_index = r.u8();
  m.ciphertext = r.lp_bytes();
  m.mac = r.lp_bytes();
  return m;
}

Bytes StateReportMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::StateReport));
  append_lp(out, origin);
  append_u32be(out, path_id);
  write_state_list(out, entries);
  return out;
}

StateReportMessage StateReportMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::StateReport);
  StateReportMessage m;
  m.origin = r.lp_string();
  m.path_id = r.u32be();
  m.entries = read_state_list(r);
  return m;
}

Bytes NakMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::Nak));
  append_u32be(out, path_id);
  append_u32be(out, sequence);
  append_u8(out, static_cast<std::uint8_t>(culprit_kind));
  append_lp(out, culprit_node);
  append_lp(out, culprit_node_b);
  return out;
}

NakMessage NakMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::Nak);
  NakMessage m;
  m.path_id = r.u32be();
  m.sequence = r.u32be();
  m.culprit_kind = static_cast<CulpritKind>(r.u8());
  m.culprit_node = r.lp_string();
  m.culprit_node_b = r.lp_string();
  return m;
}

Bytes TableQueryMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::TableQuery));
  append_lp(out, target);
  return out;
}

TableQueryMessage TableQueryMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::TableQuery);
  TableQueryMessage m;
  m.target = r.lp_string();
  return m;
}

Bytes TableResponseMessage::encode() const {
  Bytes out;
  append_u8(out, static_cast<std::uint8_t>(WireType::TableResponse));
  append_lp(out, owner);
  append_u8(out, static_cast<std::uint8_t>(own_state));
  write_state_list(out, neighbor_states);
  return out;
}

TableResponseMessage TableResponseMessage::decode(const Bytes& data) {
  ByteReader r(data);
  expect_type(r, WireType::TableResponse);
  TableResponseMessage m;
  m.owner = r.lp_string();
  m.own_state = state_from_int(r.u8());
  m.neighbor_states = read_state_list(r);
  return m;
}

}  // namespace msiim
