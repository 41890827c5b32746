#include "aggnet/provisioning.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aggnet {

namespace {

// Splits a paired route at the first visit of the aggregation node.
size_t split_point(const std::vector<NodeId>& route, NodeId agg_node, int demand) {
  const auto it = std::find(route.begin(), route.end(), agg_node);
  if (it == route.end())
    throw ValidationError("route of demand " + std::to_string(demand) +
                          " does not visit its aggregation node " +
                          std::to_string(agg_node));
  return static_cast<size_t>(it - route.begin());
}

}  // namespace

AggregationPlan route_bypass(const Topology& t, const DemandSet& ds) {
  AggregationPlan plan;
  plan.routes.reserve(ds.size());
  for (const Demand& d : ds.demands())
    plan.routes.push_back(t.shortest_path(d.src, d.dst));
  plan.cost = plan_cost(plan);
  return plan;
}

std::vector<Lightpath> extract_lightpaths(const AggregationPlan& plan) {
  std::vector<Lightpath> lps;
  auto emit = [&lps](std::vector<NodeId> path, LightpathKind kind,
                     std::vector<int> demands) {
    if (path.size() < 2) return;  // collapsed feeder, nothing to light
    lps.push_back(Lightpath{static_cast<int>(lps.size()), std::move(path), kind,
                            std::move(demands)});
  };

  for (int d = 0; d < static_cast<int>(plan.routes.size()); ++d) {
    const int pi = plan.pair_of(d);
    if (pi < 0) {
      emit(plan.routes[d], LightpathKind::WholeDemand, {d});
      continue;
    }
    const PlanPair& pair = plan.pairs[pi];
    if (d != std::min(pair.d1, pair.d2)) continue;  // pair handled once

    for (int member : {pair.d1, pair.d2}) {
      const auto& route = plan.routes[member];
      const size_t at = split_point(route, pair.agg_node, member);
      emit(std::vector<NodeId>(route.begin(), route.begin() + at + 1),
           LightpathKind::Feeder, {member});
    }
    emit(pair.shared_segment, LightpathKind::Aggregated, {pair.d1, pair.d2});
  }
  return lps;
}

WavelengthAssignment assign_wavelengths_first_fit(const Topology& t,
                                                  const std::vector<Lightpath>& lps) {
  for (size_t i = 0; i < lps.size(); ++i)
    if (lps[i].id != static_cast<int>(i))
      throw ValidationError("lightpath ids must equal their positions");

  // Link-index sets, validated against the topology up front.
  std::vector<std::vector<int>> used_links(lps.size());
  for (size_t i = 0; i < lps.size(); ++i) {
    const auto& path = lps[i].path;
    if (path.size() < 2)
      throw ValidationError("lightpath " + std::to_string(i) + " has no links");
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      const int e = t.link_index(path[k], path[k + 1]);
      if (e < 0)
        throw ValidationError("lightpath " + std::to_string(i) + " uses missing link " +
                              std::to_string(path[k]) + "->" + std::to_string(path[k + 1]));
      used_links[i].push_back(e);
    }
    std::sort(used_links[i].begin(), used_links[i].end());
  }

  // Longer paths first; ties by id.
  std::vector<int> order(lps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&lps](int a, int b) {
    if (lps[a].path.size() != lps[b].path.size())
      return lps[a].path.size() > lps[b].path.size();
    return a < b;
  });

  auto shares_link = [&used_links](int a, int b) {
    const auto& la = used_links[a];
    const auto& lb = used_links[b];
    size_t i = 0, j = 0;
    while (i < la.size() && j < lb.size()) {
      if (la[i] == lb[j]) return true;
      la[i] < lb[j] ? ++i : ++j;
    }
    return false;
  };

  WavelengthAssignment wa;
  wa.wavelength.assign(lps.size(), 0);
  for (int lp : order) {
    std::set<int> taken;
    for (int prev : order) {
      if (wa.wavelength[prev] == 0 || prev == lp) continue;
      if (shares_link(lp, prev)) taken.insert(wa.wavelength[prev]);
    }
    int wl = 1;
    while (taken.count(wl)) ++wl;
    wa.wavelength[lp] = wl;
    wa.count = std::max(wa.count, wl);
  }
  return wa;
}

double relative_gain(long long bypass_cost, long long agg_cost) {
  if (bypass_cost == 0) {
    if (agg_cost == 0) return 0.0;
    throw std::logic_error("zero bypass cost with nonzero aggregated cost");
  }
  return static_cast<double>(bypass_cost - agg_cost) / static_cast<double>(bypass_cost);
}

std::vector<int> overloaded_links(const Topology& t, const std::vector<Lightpath>& lps,
                                  int channel_limit) {
  std::vector<int> channels(t.link_count(), 0);
  for (const Lightpath& lp : lps)
    for (size_t k = 0; k + 1 < lp.path.size(); ++k)
      ++channels[t.link_index(lp.path[k], lp.path[k + 1])];
  std::vector<int> flagged;
  for (int e = 0; e < t.link_count(); ++e)
    if (channels[e] > channel_limit) flagged.push_back(e);
  return flagged;
}

std::vector<std::string> wavelength_labels(const AggregationPlan& plan,
                                           const std::vector<Lightpath>& lps,
                                           const WavelengthAssignment& wa) {
  std::vector<std::string> labels(plan.routes.size());
  std::vector<std::string> feeder(plan.routes.size()), shared(plan.routes.size());
  for (const Lightpath& lp : lps) {
    const std::string wl = std::to_string(wa.wavelength[lp.id]);
    for (int d : lp.demands) {
      if (lp.kind == LightpathKind::Aggregated)
        shared[d] = wl;
      else if (lp.kind == LightpathKind::Feeder)
        feeder[d] = wl;
      else
        labels[d] = wl;
    }
  }
  for (size_t d = 0; d < labels.size(); ++d) {
    if (!shared[d].empty())
      labels[d] = feeder[d].empty() ? shared[d] : feeder[d] + "+" + shared[d];
  }
  return labels;
}

}  // namespace aggnet
