#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace msiim {

/// Operational level of a smart-grid entity.
///
///   0  no operation
///   1  reduced operation caused by false data
///   2  reduced operation caused by interdependent non-operational entities
///   3  full operation
///
/// Power (P) entities never hold value 1; their admissible set is {0,2,3}.
enum class StateValue : std::uint8_t {
  NoOperation = 0,
  FalseData = 1,
  ReducedByDependency = 2,
  FullOperation = 3,
};

constexpr int to_int(StateValue v) { return static_cast<int>(v); }

StateValue state_from_int(int v);  // throws on values outside 0..3

std::string to_string(StateValue v);

/// Larger of the two operands.
StateValue max_or(StateValue a, StateValue b);

/// Smaller of the two operands.
StateValue min_and(StateValue a, StateValue b);

/// Third operator of the state algebra. Closed form: if both inputs are
/// positive the result is min(a,b); if exactly one input is 0 the result is
/// min(other, 2); 0 when both are 0. Note (3,0) -> 2 but (3,1) -> 1, so this
/// operator is not monotone.
StateValue new_xor(StateValue a, StateValue b);

enum class EntityKind : std::uint8_t { Power, Comm, CyberPhysical };

std::string to_string(EntityKind k);  // "P", "C", "CP"

/// Kind inferred from the identifier prefix: P<digits> are power entities,
/// U<digits> are PMUs (cyber-physical), everything else (C, R, GW, PDC, CC,
/// S...) lives in the communication layer.
EntityKind kind_from_id(const std::string& id);

/// Whether a kind may hold the given state (P excludes 1).
bool kind_admits(EntityKind kind, StateValue v);

struct EntityRef {
  std::string id;
  EntityKind kind;

  static EntityRef from_id(const std::string& id) { return {id, kind_from_id(id)}; }

  bool operator==(const EntityRef&) const = default;
  auto operator<=>(const EntityRef&) const = default;
};

}  // namespace msiim
