#include "aggnet/plan.hpp"

#include <sstream>

namespace aggnet {

namespace {

std::string dash_join(const std::vector<NodeId>& path) {
  std::ostringstream out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out << '-';
    out << path[i];
  }
  return out.str();
}

}  // namespace

int AggregationPlan::pair_of(int d) const {
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].d1 == d || pairs[i].d2 == d) return static_cast<int>(i);
  return -1;
}

long long plan_cost(const AggregationPlan& plan) {
  long long cost = 0;
  for (const auto& route : plan.routes)
    cost += static_cast<long long>(route.size()) - 1;
  for (const PlanPair& pair : plan.pairs)
    cost -= static_cast<long long>(pair.shared_segment.size()) - 1;
  return cost;
}

std::string plan_to_csv(const AggregationPlan& plan, const DemandSet& ds,
                        const std::vector<std::string>& wavelength_labels) {
  const bool with_wl = !wavelength_labels.empty();
  std::ostringstream out;
  out << "demand,route,agg_node,agg_links,with_demand";
  if (with_wl) out << ",wavelength";
  out << "\n";

  for (const Demand& d : ds.demands()) {
    out << d.src << "->" << d.dst << "," << dash_join(plan.routes[d.id]) << ",";
    const int pi = plan.pair_of(d.id);
    if (pi < 0) {
      out << "N/A,N/A,N/A";
    } else {
      const PlanPair& pair = plan.pairs[pi];
      const Demand& partner = ds[pair.d1 == d.id ? pair.d2 : pair.d1];
      out << pair.agg_node << "," << dash_join(pair.shared_segment) << ","
          << partner.src << "->" << partner.dst;
    }
    if (with_wl) out << "," << wavelength_labels[d.id];
    out << "\n";
  }
  return out.str();
}

}  // namespace aggnet
