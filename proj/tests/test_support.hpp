#pragma once

// Shared helpers for the unit and acceptance suites: shipped-data loading,
// seeded random instances, and an oracle solver kept independent of the
// library's own solving path (plain BFS plus blunt matching enumeration).

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace testsup {

inline std::string data_path(const std::string& name) {
  return std::string(AGGNET_DATA_DIR) + "/" + name;
}

inline aggnet::Topology load_nsfnet() {
  return aggnet::Topology::load(data_path("nsfnet.topo"));
}

inline aggnet::Topology load_toy() {
  return aggnet::Topology::load(data_path("toy.topo"));
}

inline aggnet::DemandSet load_table1() {
  return aggnet::DemandSet::load(data_path("table1.demands"));
}

inline aggnet::DemandSet load_toy_demands() {
  return aggnet::DemandSet::load(data_path("toy.demands"));
}

// Random connected topology with up to max_nodes nodes: a random spanning
// tree plus a sprinkling of extra edges, rendered through the text parser.
inline aggnet::Topology random_topology(aggnet::SplitMix64& rng, int max_nodes = 8) {
  const int n = 2 + static_cast<int>(rng.below(max_nodes - 1));
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v)
    edges.emplace_back(1 + static_cast<int>(rng.below(v - 1)), v);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const bool in_tree =
          std::find(edges.begin(), edges.end(), std::pair{u, v}) != edges.end();
      if (!in_tree && rng.below(100) < 30) edges.emplace_back(u, v);
    }
  std::ostringstream text;
  text << "nodes " << n << "\n";
  for (const auto& [u, v] : edges) text << "link " << u << " " << v << "\n";
  return aggnet::Topology::parse(text.str());
}

// Random demand set biased toward shared destinations.
inline aggnet::DemandSet random_demands(aggnet::SplitMix64& rng,
                                        const aggnet::Topology& t,
                                        int max_demands = 6) {
  const int n = t.node_count();
  const int num_dests = 1 + static_cast<int>(rng.below(std::min(3, n - 1)));
  std::vector<int> dests;
  while (static_cast<int>(dests.size()) < num_dests) {
    const int d = 1 + static_cast<int>(rng.below(n));
    if (std::find(dests.begin(), dests.end(), d) == dests.end()) dests.push_back(d);
  }
  const int want = 1 + static_cast<int>(rng.below(max_demands));
  std::vector<std::pair<aggnet::NodeId, aggnet::NodeId>> pairs;
  for (int tries = 0; tries < 200 && static_cast<int>(pairs.size()) < want; ++tries) {
    const int dst = dests[rng.below(dests.size())];
    const int src = 1 + static_cast<int>(rng.below(n));
    if (src == dst) continue;
    if (std::find(pairs.begin(), pairs.end(), std::pair{src, dst}) != pairs.end())
      continue;
    pairs.emplace_back(src, dst);
  }
  return aggnet::DemandSet(pairs);
}

// BFS hop counts recomputed from the raw link list only.
inline std::vector<std::vector<int>> oracle_distances(const aggnet::Topology& t) {
  const int n = t.node_count();
  std::vector<std::vector<int>> adj(n + 1);
  for (const aggnet::Link& l : t.links()) adj[l.src].push_back(l.dst);
  std::vector<std::vector<int>> dist(n + 1, std::vector<int>(n + 1, -1));
  for (int s = 1; s <= n; ++s) {
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

// Minimum wavelength-link total over every matching of same-destination
// demand pairs and every aggregation-node choice. Exponential and proud;
// only meant for desk-size instances.
inline long long oracle_best_cost(const aggnet::Topology& t, const aggnet::DemandSet& ds) {
  const auto dist = oracle_distances(t);
  const int n = ds.size();
  const int nodes = t.node_count();

  std::vector<char> used(n, 0);
  long long best = std::numeric_limits<long long>::max();

  std::function<void(int, long long)> recurse = [&](int i, long long acc) {
    while (i < n && used[i]) ++i;
    if (i == n) {
      best = std::min(best, acc);
      return;
    }
    used[i] = 1;
    recurse(i + 1, acc + dist[ds[i].src][ds[i].dst]);
    for (int j = i + 1; j < n; ++j) {
      if (used[j] || ds[j].dst != ds[i].dst) continue;
      used[j] = 1;
      long long pair_best = std::numeric_limits<long long>::max();
      for (int v = 1; v <= nodes; ++v) {
        if (v == ds[i].dst) continue;
        pair_best = std::min(pair_best,
                             static_cast<long long>(dist[ds[i].src][v]) +
                                 dist[ds[j].src][v] + dist[v][ds[i].dst]);
      }
      recurse(i + 1, acc + pair_best);
      used[j] = 0;
    }
    used[i] = 0;
  };
  recurse(0, 0);
  return best;
}

}  // namespace testsup
