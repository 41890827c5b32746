#include "aggnet/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace aggnet {

namespace {

PairedCost min_merge_cost(const std::vector<int>& from_s1, const std::vector<int>& from_s2,
                          const std::vector<int>& to_dest, NodeId dest, int num_nodes) {
  PairedCost best;
  best.cost = std::numeric_limits<int>::max();
  best.tie_count = 0;
  for (NodeId v = 1; v <= num_nodes; ++v) {
    if (v == dest) continue;
    const int cost = from_s1[v] + from_s2[v] + to_dest[v];
    if (cost < best.cost) {
      best.cost = cost;
      best.agg_node = v;
      best.tie_count = 1;
    } else if (cost == best.cost) {
      ++best.tie_count;
    }
  }
  return best;
}

}  // namespace

int alone_cost(const Topology& t, const Demand& d) {
  return t.hop_distance(d.src, d.dst);
}

PairedCost paired_cost(const Topology& t, const Demand& d1, const Demand& d2) {
  if (d1.id == d2.id)
    throw ValidationError("cannot pair a demand with itself");
  if (d1.dst != d2.dst)
    throw ValidationError("cannot pair demands with different destinations (" +
                          std::to_string(d1.dst) + " vs " + std::to_string(d2.dst) + ")");
  return min_merge_cost(t.hop_distances_from(d1.src), t.hop_distances_from(d2.src),
                        t.hop_distances_from(d1.dst), d1.dst, t.node_count());
}

PairedCostTable::PairedCostTable(const Topology& t, const DemandSet& ds) : n_(ds.size()) {
  table_.resize(static_cast<size_t>(n_) * n_);
  present_.assign(static_cast<size_t>(n_) * n_, 0);

  std::vector<std::vector<int>> dist(t.node_count() + 1);
  auto dist_from = [&](NodeId u) -> const std::vector<int>& {
    if (dist[u].empty()) dist[u] = t.hop_distances_from(u);
    return dist[u];
  };

  for (int d1 = 0; d1 < n_; ++d1)
    for (int d2 = d1 + 1; d2 < n_; ++d2) {
      const Demand& a = ds[d1];
      const Demand& b = ds[d2];
      if (a.dst != b.dst) continue;
      const PairedCost pc = min_merge_cost(dist_from(a.src), dist_from(b.src),
                                           dist_from(a.dst), a.dst, t.node_count());
      table_[static_cast<size_t>(d1) * n_ + d2] = pc;
      table_[static_cast<size_t>(d2) * n_ + d1] = pc;
      present_[static_cast<size_t>(d1) * n_ + d2] = 1;
      present_[static_cast<size_t>(d2) * n_ + d1] = 1;
    }
}

bool PairedCostTable::has_entry(int d1, int d2) const {
  return d1 >= 0 && d2 >= 0 && d1 < n_ && d2 < n_ &&
         present_[static_cast<size_t>(d1) * n_ + d2];
}

const PairedCost& PairedCostTable::entry(int d1, int d2) const {
  if (!has_entry(d1, d2))
    throw ValidationError("no paired cost for demands " + std::to_string(d1) + "," +
                          std::to_string(d2));
  return table_[static_cast<size_t>(d1) * n_ + d2];
}

namespace {

struct GroupChoice {
  long long cost = 0;
  std::vector<std::pair<int, int>> pairs;  // demand ids, first < second

  bool better_than(const GroupChoice& other) const {
    if (cost != other.cost) return cost < other.cost;
    if (pairs.size() != other.pairs.size()) return pairs.size() < other.pairs.size();
    return pairs < other.pairs;
  }
};

// Exhaustive matching enumeration over one destination group. Ties go to
// fewer pairs, then the smallest pair list, so results never depend on
// enumeration order.
void enumerate_matchings(const std::vector<int>& members, size_t next,
                         std::vector<char>& used, GroupChoice& current,
                         const std::vector<long long>& alone,
                         const PairedCostTable& paired, GroupChoice& best) {
  while (next < members.size() && used[next]) ++next;
  if (next == members.size()) {
    if (best.cost < 0 || current.better_than(best)) best = current;
    return;
  }

  used[next] = 1;

  current.cost += alone[next];
  enumerate_matchings(members, next + 1, used, current, alone, paired, best);
  current.cost -= alone[next];

  for (size_t j = next + 1; j < members.size(); ++j) {
    if (used[j]) continue;
    used[j] = 1;
    const long long pair_cost = paired.entry(members[next], members[j]).cost;
    current.cost += pair_cost;
    current.pairs.emplace_back(members[next], members[j]);
    enumerate_matchings(members, next + 1, used, current, alone, paired, best);
    current.pairs.pop_back();
    current.cost -= pair_cost;
    used[j] = 0;
  }

  used[next] = 0;
}

std::vector<NodeId> concat_route(std::vector<NodeId> feeder,
                                 const std::vector<NodeId>& shared) {
  feeder.insert(feeder.end(), shared.begin() + 1, shared.end());
  return feeder;
}

}  // namespace

AggregationPlan solve(const Topology& t, const DemandSet& ds, int enumeration_cap) {
  AggregationPlan plan;
  plan.routes.resize(ds.size());
  if (ds.empty()) return plan;

  std::map<NodeId, std::vector<int>> groups;  // destination -> demand ids, ascending
  for (const Demand& d : ds.demands()) groups[d.dst].push_back(d.id);

  const PairedCostTable paired(t, ds);
  long long total = 0;

  for (const auto& [dest, members] : groups) {
    if (static_cast<int>(members.size()) > enumeration_cap)
      throw CapacityError("destination group for node " + std::to_string(dest) + " has " +
                          std::to_string(members.size()) +
                          " demands, above the exact enumeration cap of " +
                          std::to_string(enumeration_cap) +
                          "; export the LP and use an external solver");

    std::vector<long long> alone(members.size());
    for (size_t i = 0; i < members.size(); ++i)
      alone[i] = alone_cost(t, ds[members[i]]);

    GroupChoice best;
    best.cost = -1;
    GroupChoice scratch;
    std::vector<char> used(members.size(), 0);
    enumerate_matchings(members, 0, used, scratch, alone, paired, best);
    total += best.cost;

    std::vector<char> in_pair(members.size(), 0);
    for (const auto& [d1, d2] : best.pairs) {
      const NodeId v = paired.entry(d1, d2).agg_node;
      const std::vector<NodeId> shared = t.shortest_path(v, dest);
      plan.routes[d1] = concat_route(t.shortest_path(ds[d1].src, v), shared);
      plan.routes[d2] = concat_route(t.shortest_path(ds[d2].src, v), shared);
      plan.pairs.push_back(PlanPair{d1, d2, v, shared});
      for (size_t i = 0; i < members.size(); ++i)
        if (members[i] == d1 || members[i] == d2) in_pair[i] = 1;
    }
    for (size_t i = 0; i < members.size(); ++i)
      if (!in_pair[i])
        plan.routes[members[i]] = t.shortest_path(ds[members[i]].src, dest);
  }

  plan.cost = total;
  return plan;
}

MilpSolution encode_plan(const MilpModel& m, const AggregationPlan& p) {
  const VariableCatalog& cat = m.catalog;
  if (static_cast<int>(p.routes.size()) != cat.num_demands)
    throw ValidationError("plan and model disagree on the demand count");

  std::map<std::pair<NodeId, NodeId>, int> link_index;
  for (size_t e = 0; e < m.links.size(); ++e)
    link_index[{m.links[e].src, m.links[e].dst}] = static_cast<int>(e);

  auto edge = [&link_index](NodeId a, NodeId b) {
    const auto it = link_index.find({a, b});
    if (it == link_index.end())
      throw ValidationError("plan uses link " + std::to_string(a) + "->" +
                            std::to_string(b) + " absent from the model instance");
    return it->second;
  };

  MilpSolution sol;
  sol.assignment.assign(cat.size(), 0);

  for (int d = 0; d < cat.num_demands; ++d) {
    const auto& route = p.routes[d];
    if (route.empty() || route.front() != m.demands[d].src ||
        route.back() != m.demands[d].dst)
      throw ValidationError("route of demand " + std::to_string(d) +
                            " does not run from its source to its destination");
    for (size_t i = 0; i + 1 < route.size(); ++i)
      sol.assignment[cat.route(d, edge(route[i], route[i + 1]))] = 1;
  }

  for (const PlanPair& pair : p.pairs) {
    const int v = pair.agg_node - 1;
    if (v < 0 || v >= cat.num_nodes)
      throw ValidationError("aggregation node out of range");
    sol.assignment[cat.agg_node(pair.d1, v)] = 1;
    sol.assignment[cat.agg_node(pair.d2, v)] = 1;
    sol.assignment[cat.pairing(pair.d1, pair.d2)] = 1;
    sol.assignment[cat.pairing(pair.d2, pair.d1)] = 1;
    for (size_t i = 0; i + 1 < pair.shared_segment.size(); ++i) {
      const int e = edge(pair.shared_segment[i], pair.shared_segment[i + 1]);
      sol.assignment[cat.agg_link(pair.d1, v, e)] = 1;
      sol.assignment[cat.agg_link(pair.d2, v, e)] = 1;
    }
  }

  sol.objective_value = m.objective_value(sol.assignment);
  return sol;
}

}  // namespace aggnet
