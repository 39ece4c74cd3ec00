#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msiimgrid/state.hpp"

namespace msiim {

struct Position {
  double x = 0;
  double y = 0;
  bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b);

/// Orders "S2" before "S10": alphabetic prefix first, then the numeric
/// suffix. Used for every tie-break in topology construction.
bool natural_less(const std::string& a, const std::string& b);

struct SubstationRecord {
  std::string id;
  Position position;
  std::vector<std::string> bus_ids;
  std::vector<std::string> pmu_ids;  // may be empty
  std::string gateway_id;
};

struct Region {
  int id = 0;  // 1-based, creation order
  std::vector<std::string> member_substation_ids;
  std::optional<std::string> pdc_id;
  std::optional<Position> pdc_position;
};

struct ControlCenterAssignment {
  std::string main_cc_substation_id;
  std::string backup_cc_substation_id;
};

struct RelayRecord {
  std::string id;
  Position position;
  double battery_mah = 200.0;
};

enum class CommNodeKind : std::uint8_t { Gateway, Relay, Pdc, CcGateway, CcServer };

struct CommNode {
  std::string id;
  CommNodeKind kind = CommNodeKind::Relay;
  Position position;
};

using PowerAdjacency = std::map<std::string, std::set<std::string>>;

/// Joint power/ICT topology. The power side is immutable once built; the
/// comm side supports node/edge removal (culprit eviction), each removal
/// bumping `version` so path caches know to re-discover.
struct TopologyGraph {
  std::map<std::string, SubstationRecord> substations;
  PowerAdjacency power_adjacency;
  std::vector<Region> regions;
  ControlCenterAssignment control_centers;

  std::map<std::string, CommNode> comm_nodes;
  std::map<std::string, std::set<std::string>> comm_adjacency;
  /// Normalized (min,max) id pairs for dedicated wired links; these are never
  /// attackable and never removed.
  std::set<std::pair<std::string, std::string>> wired_links;
  std::uint64_t version = 0;

  bool has_comm_node(const std::string& id) const;
  const CommNode& comm_node(const std::string& id) const;
  std::vector<std::string> comm_neighbors(const std::string& id) const;
  bool has_comm_edge(const std::string& a, const std::string& b) const;
  bool is_wired_link(const std::string& a, const std::string& b) const;

  void add_comm_node(CommNode node);
  void add_comm_edge(const std::string& a, const std::string& b, bool wired = false);
  void remove_comm_node(const std::string& id);
  void remove_comm_edge(const std::string& a, const std::string& b);

  const Region& region_of_substation(const std::string& substation_id) const;
};

/// Substations on the strict convex hull of the layout, the candidates for
/// region seeds.
std::vector<std::string> border_substations(
    const std::map<std::string, SubstationRecord>& substations);

/// Region growing: seed at the best-connected border substation, absorb
/// everything within distance d, then re-seed at the nearest unassigned
/// substation and repeat. Deterministic under the natural-id tie-break.
std::vector<Region> partition_regions(
    const std::map<std::string, SubstationRecord>& substations,
    const PowerAdjacency& power_adjacency, double distance_threshold);

/// Highest power-graph degree wins, second highest becomes backup; ties go
/// to the smaller id.
ControlCenterAssignment select_control_centers(
    const std::map<std::string, SubstationRecord>& substations,
    const PowerAdjacency& power_adjacency);

/// A region receives a PDC only when one of its substations hosts a PMU; the
/// PDC sits at the centroid of those substations.
void place_pdcs(std::vector<Region>& regions,
                const std::map<std::string, SubstationRecord>& substations);

struct CommGraphSpec {
  std::vector<RelayRecord> relays;
  double radio_range = 0;
  /// When set, replaces the radio-range rule for gateway/relay/PDC links
  /// (schematic fixtures wire their paths explicitly).
  std::optional<std::vector<std::pair<std::string, std::string>>> explicit_edges;
};

/// Populates the comm side of `graph`: gateways and PDCs from the power
/// model, relays from the spec, radio links within range (or the explicit
/// list), and dedicated wired PDC/CC-gateway/CC-server links. Throws
/// DisconnectedGateway when a PMU-bearing gateway cannot reach its region's
/// PDC.
void build_comm_graph(TopologyGraph& graph, const CommGraphSpec& spec);

}  // namespace msiim
