#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aggnet/topology.hpp"

namespace aggnet {

// Unit-rate request from src to dst (one wavelength worth of traffic).
struct Demand {
  int id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  bool operator==(const Demand&) const = default;
};

// Ordered demand list; ids equal positions. (src,dst) pairs are unique and
// src != dst throughout.
class DemandSet {
 public:
  DemandSet() = default;
  // Validates and assigns ids 0..n-1 in order.
  explicit DemandSet(const std::vector<std::pair<NodeId, NodeId>>& pairs);

  // Grammar (line based, '#' starts a comment):  demand S D
  static DemandSet parse(const std::string& text);
  static DemandSet load(const std::string& path);
  std::string serialize() const;

  const std::vector<Demand>& demands() const { return demands_; }
  const Demand& operator[](int id) const { return demands_[id]; }
  int size() const { return static_cast<int>(demands_.size()); }
  bool empty() const { return demands_.empty(); }

 private:
  std::vector<Demand> demands_;
};

struct ScenarioConfig {
  int num_sources = 2;
  int num_destinations = 0;
  int num_samples = 1;
  std::uint64_t seed = 0;
  // When set, the source draw ignores the sample index, pinning the same
  // sources across every sample of a scenario.
  bool fixed_sources = false;

  void validate(const Topology& t) const;
};

// splitmix64; fixed generator so samples are reproducible run to run.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  // Unbiased draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

// Two-to-many sample: num_sources distinct sources drawn uniformly, then
// num_destinations distinct destinations from the remaining nodes, and the
// full source x destination cross-product emitted in draw order.
// Deterministic in (cfg.seed, sample_index).
DemandSet generate_two_to_many(const Topology& t, const ScenarioConfig& cfg,
                               int sample_index);

DemandSet parse_demands(const std::string& text);
std::string serialize_demands(const DemandSet& ds);

}  // namespace aggnet
