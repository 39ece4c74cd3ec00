#include "msiimgrid/state.hpp"

#include <algorithm>
#include <cctype>

#include "msiimgrid/error.hpp"

namespace msiim {

StateValue state_from_int(int v) {
  if (v < 0 || v > 3)
    throw Error(ErrorCode::InvalidScenario,
                "state value " + std::to_string(v) + " outside 0..3");
  return static_cast<StateValue>(v);
}

std::string to_string(StateValue v) { return std::to_string(to_int(v)); }

StateValue max_or(StateValue a, StateValue b) { return std::max(a, b); }

StateValue min_and(StateValue a, StateValue b) { return std::min(a, b); }

StateValue new_xor(StateValue a, StateValue b) {
  int x = to_int(a), y = to_int(b);
  if (x > 0 && y > 0) return static_cast<StateValue>(std::min(x, y));
  if (x == 0 && y == 0) return StateValue::NoOperation;
  return static_cast<StateValue>(std::min(std::max(x, y), 2));
}

std::string to_string(EntityKind k) {
  switch (k) {
    case EntityKind::Power:
      return "P";
    case EntityKind::Comm:
      return "C";
    case EntityKind::CyberPhysical:
      return "CP";
  }
  return "?";
}

EntityKind kind_from_id(const std::string& id) {
  auto prefix_digits = [&](char c) {
    return id.size() >= 2 && id[0] == c &&
           std::all_of(id.begin() + 1, id.end(),
                       [](unsigned char d) { return std::isdigit(d); });
  };
  if (prefix_digits('P')) return EntityKind::Power;
  if (prefix_digits('U')) return EntityKind::CyberPhysical;
  return EntityKind::Comm;
}

bool kind_admits(EntityKind kind, StateValue v) {
  return kind != EntityKind::Power || v != StateValue::FalseData;
}

}  // namespace msiim
