#include "msiimgrid/state_table.hpp"

#include "msiimgrid/error.hpp"

namespace msiim {

StateTable::StateTable(EntityRef owner, std::set<std::string> neighbors,
                       StateValue initial_neighbor_state)
    : owner_(std::move(owner)) {
  for (const auto& id : neighbors)
    neighbor_states_.emplace(id, initial_neighbor_state);
}

StateValue StateTable::neighbor_state(const std::string& id) const {
  auto it = neighbor_states_.find(id);
  if (it == neighbor_states_.end())
    throw Error(ErrorCode::NonNeighbor,
                id + " is not adjacent to " + owner_.id);
  return it->second;
}

void StateTable::record_neighbor_state(const std::string& neighbor, StateValue v) {
  auto it = neighbor_states_.find(neighbor);
  if (it == neighbor_states_.end())
    throw Error(ErrorCode::NonNeighbor,
                neighbor + " is not adjacent to " + owner_.id);
  if (!kind_admits(kind_from_id(neighbor), v))
    throw Error(ErrorCode::KindViolation,
                "P-type entity " + neighbor + " cannot hold state 1");
  it->second = v;
  recompute_own_state();
}

void StateTable::set_round_idr(IdrExpr idr) {
  round_idr_ = std::move(idr);
  recompute_own_state();
}

void StateTable::recompute_own_state() {
  if (!round_idr_) return;
  Assignment assignment;
  for (const auto& [id, v] : neighbor_states_) assignment[id] = v;
  own_state_ = evaluate(*round_idr_, assignment);
}

}  // namespace msiim
