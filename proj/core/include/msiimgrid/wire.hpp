#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msiimgrid/bytes.hpp"
#include "msiimgrid/state.hpp"

namespace msiim {

/// Canonical byte layout shared by every record: a one-byte type tag,
/// big-endian fixed-width integers, and u32 length prefixes on variable
/// fields. Encodings are bit-exact under the deterministic crypto suite,
/// which is what the golden transcript tests pin.
enum class WireType : std::uint8_t {
  DataFragment = 0x01,
  KeyFragment = 0x02,
  StateReport = 0x03,
  Nak = 0x04,
  TableQuery = 0x05,
  TableResponse = 0x06,
};

/// One 12-sample chunk in flight.
///
/// inner_tag  t1 = MAC(SK, EDF)            checked by the PDC
/// middle_tag t2 = MAC(KF_path, EDF||t1)   checked by every relay holding KF
/// outer_tag  t3 = MAC(PK_hop, EDF||t2)    recomputed per hop
struct DataFragmentMessage {
  std::uint32_t path_id = 0;
  std::uint32_t sequence = 0;
  Bytes edf;  // ciphertext of the 12-sample chunk
  Bytes inner_tag;
  Bytes middle_tag;
  Bytes outer_tag;

  Bytes encode() const;
  static DataFragmentMessage decode(const Bytes& data);
  bool operator==(const DataFragmentMessage&) const = default;
};

/// Key fragment hop record: ciphertext under the current hop's pairwise key
/// plus a MAC under the same key. Re-encrypted and re-MACed at every hop.
struct KeyFragmentMessage {
  std::uint32_t path_id = 0;
  std::uint8_t fragment_index = 0;  // 0..3
  Bytes ciphertext;
  Bytes mac;

  Bytes encode() const;
  static KeyFragmentMessage decode(const Bytes& data);
  bool operator==(const KeyFragmentMessage&) const = default;
};

/// Detection report propagating toward the PDC. Each forwarder appends its
/// own recomputed state.
struct StateReportMessage {
  std::string origin;
  std::uint32_t path_id = 0;
  std::vector<std::pair<std::string, StateValue>> entries;

  StateValue origin_state() const { return entries.front().second; }

  Bytes encode() const;
  static StateReportMessage decode(const Bytes& data);
  bool operator==(const StateReportMessage&) const = default;
};

enum class CulpritKind : std::uint8_t { None = 0, Node = 1, Channel = 2 };

/// PDC -> gateway: fragment needs resending; culprit already removed.
struct NakMessage {
  std::uint32_t path_id = 0;
  std::uint32_t sequence = 0;
  CulpritKind culprit_kind = CulpritKind::None;
  std::string culprit_node;      // Node: the node; Channel: upstream endpoint
  std::string culprit_node_b;    // Channel: downstream endpoint

  Bytes encode() const;
  static NakMessage decode(const Bytes& data);
  bool operator==(const NakMessage&) const = default;
};

struct TableQueryMessage {
  std::string target;

  Bytes encode() const;
  static TableQueryMessage decode(const Bytes& data);
  bool operator==(const TableQueryMessage&) const = default;
};

struct TableResponseMessage {
  std::string owner;
  StateValue own_state = StateValue::FullOperation;
  std::vector<std::pair<std::string, StateValue>> neighbor_states;

  Bytes encode() const;
  static TableResponseMessage decode(const Bytes& data);
  bool operator==(const TableResponseMessage&) const = default;
};

}  // namespace msiim
