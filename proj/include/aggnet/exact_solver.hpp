#pragma once

#include <vector>

#include "aggnet/milp_model.hpp"
#include "aggnet/plan.hpp"
#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace aggnet {

struct PairedCost {
  int cost = 0;        // hops: feeder + feeder + shared segment
  NodeId agg_node = 0; // smallest node id among the minimizers
  int tie_count = 1;   // how many nodes achieve the minimum
};

// Symmetric per-pair cost table over same-destination demand pairs.
class PairedCostTable {
 public:
  PairedCostTable(const Topology& t, const DemandSet& ds);
  // Only valid for same-destination pairs (entry symmetric in d1,d2).
  const PairedCost& entry(int d1, int d2) const;
  bool has_entry(int d1, int d2) const;

 private:
  int n_ = 0;
  std::vector<PairedCost> table_;
  std::vector<char> present_;
};

// Shortest-path cost of provisioning d on its own.
int alone_cost(const Topology& t, const Demand& d);

// Cheapest way to merge d1 and d2 (same destination) at one node:
// min over v != destination of d(s1,v) + d(s2,v) + d(v,dest), ties broken
// toward the smallest node id.
PairedCost paired_cost(const Topology& t, const Demand& d1, const Demand& d2);

// Optimal provisioning by decomposition: demands grouped per destination,
// every matching of each group enumerated against the paired-cost table,
// ties resolved toward fewer pairs and then the lexicographically smallest
// pair list. Groups larger than enumeration_cap raise CapacityError (use
// the LP export for such instances).
AggregationPlan solve(const Topology& t, const DemandSet& ds,
                      int enumeration_cap = 12);

// Encodes a plan as a full variable assignment of the matching model; the
// result satisfies every model constraint and reproduces the plan cost as
// its objective value.
MilpSolution encode_plan(const MilpModel& m, const AggregationPlan& p);

}  // namespace aggnet
