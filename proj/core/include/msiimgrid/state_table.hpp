#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "msiimgrid/idr.hpp"
#include "msiimgrid/state.hpp"

namespace msiim {

/// A node's local view: its own state plus the last known state of every
/// adjacent entity. A compromised owner keeps believing its own state is
/// above 1; only neighbors downgrade it.
class StateTable {
 public:
  StateTable() = default;
  StateTable(EntityRef owner, std::set<std::string> neighbors,
             StateValue initial_neighbor_state = StateValue::FullOperation);

  const EntityRef& owner() const { return owner_; }
  StateValue own_state() const { return own_state_; }
  void set_own_state(StateValue v) { own_state_ = v; }

  const std::map<std::string, StateValue>& neighbor_states() const {
    return neighbor_states_;
  }

  bool is_neighbor(const std::string& id) const {
    return neighbor_states_.find(id) != neighbor_states_.end();
  }

  StateValue neighbor_state(const std::string& id) const;

  /// Records a neighbor observation, then recomputes own_state from the
  /// round IDR when one is installed. Throws NonNeighbor for entities not
  /// adjacent to the owner and KindViolation when a P-type neighbor is
  /// marked 1.
  void record_neighbor_state(const std::string& neighbor, StateValue v);

  /// Installs this round's IDR and immediately re-evaluates own_state.
  void set_round_idr(IdrExpr idr);
  void clear_round_idr() { round_idr_.reset(); }
  const std::optional<IdrExpr>& round_idr() const { return round_idr_; }

 private:
  void recompute_own_state();

  EntityRef owner_;
  StateValue own_state_ = StateValue::FullOperation;
  std::map<std::string, StateValue> neighbor_states_;
  std::optional<IdrExpr> round_idr_;
};

}  // namespace msiim
