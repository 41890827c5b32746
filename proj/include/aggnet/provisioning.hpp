#pragma once

#include <vector>

#include "aggnet/plan.hpp"
#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace aggnet {

enum class LightpathKind { WholeDemand, Feeder, Aggregated };

struct Lightpath {
  int id = 0;
  std::vector<NodeId> path;  // at least one link
  LightpathKind kind = LightpathKind::WholeDemand;
  std::vector<int> demands;  // 1 id, or 2 for an aggregated lightpath
};

struct WavelengthAssignment {
  std::vector<int> wavelength;  // per lightpath id, 1-based
  int count = 0;                // max index used
};

// Optical-bypass baseline: every demand on its deterministic shortest
// path, empty matching.
AggregationPlan route_bypass(const Topology& t, const DemandSet& ds);

// Splits plan routes into lightpaths: unpaired demands keep one whole
// lightpath; each pair yields up to two feeders plus one aggregated
// lightpath on the shared segment. A zero-length feeder (aggregation at
// the source) emits nothing.
std::vector<Lightpath> extract_lightpaths(const AggregationPlan& plan);

// Greedy first-fit on the link-conflict graph, processing longer paths
// first (ties by id). Each lightpath keeps one wavelength over all of its
// links and never clashes with another lightpath on a shared directed link.
WavelengthAssignment assign_wavelengths_first_fit(
    const Topology& t, const std::vector<Lightpath>& lps);

// (bypass - agg) / bypass, in [0, 1).
double relative_gain(long long bypass_cost, long long agg_cost);

// Link indices whose channel count exceeds the limit (reporting only; the
// optimization itself imposes no per-link capacity). 80 channels is a
// nominal C-band at 50 GHz spacing.
std::vector<int> overloaded_links(const Topology& t,
                                  const std::vector<Lightpath>& lps,
                                  int channel_limit = 80);

// Per-demand wavelength column labels for the plan CSV ("3" for a whole
// lightpath, "1+2" for feeder+aggregated, "2" when the feeder collapsed).
std::vector<std::string> wavelength_labels(const AggregationPlan& plan,
                                           const std::vector<Lightpath>& lps,
                                           const WavelengthAssignment& wa);

}  // namespace aggnet
