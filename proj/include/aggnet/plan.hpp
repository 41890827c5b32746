#pragma once

#include <string>
#include <vector>

#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace aggnet {

// One aggregated pair: both demands end at the same destination, merge at
// agg_node and ride shared_segment (agg_node ... destination) together.
struct PlanPair {
  int d1 = 0;
  int d2 = 0;  // d1 < d2
  NodeId agg_node = 0;
  std::vector<NodeId> shared_segment;
};

// Full provisioning decision: one route per demand plus the pair matching.
// For a physically consistent plan every pair's shared_segment is a suffix
// of both member routes.
struct AggregationPlan {
  std::vector<std::vector<NodeId>> routes;  // indexed by demand id
  std::vector<PlanPair> pairs;
  long long cost = 0;  // wavelength-link units
  // Set by the solution decoder when paired members carry different
  // aggregated segments, which one physical lightpath cannot realize.
  bool non_physical_sharing = false;

  // Index into pairs for demand d, or -1 when unpaired.
  int pair_of(int d) const;
};

// Wavelength-link total: every route link counts once per demand, minus one
// copy of each pair's shared segment (the aggregated lightpath is a single
// channel carrying both demands).
long long plan_cost(const AggregationPlan& plan);

// CSV rows mirroring the plan schema:
//   demand,route,agg_node,agg_links,with_demand[,wavelength]
// Paths are dash-joined node ids; unpaired fields print N/A. The wavelength
// column is added when labels are supplied (one string per demand).
std::string plan_to_csv(const AggregationPlan& plan, const DemandSet& ds,
                        const std::vector<std::string>& wavelength_labels = {});

}  // namespace aggnet
