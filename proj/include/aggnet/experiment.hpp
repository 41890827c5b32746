#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace aggnet {

struct SampleResult {
  int scenario = 0;  // number of destination nodes
  int sample_index = 0;
  std::uint64_t seed = 0;
  long long bypass_cost = 0;
  long long agg_cost = 0;
  double gain = 0.0;
  int bypass_wavelengths = 0;
  int agg_wavelengths = 0;
  int num_pairs = 0;
  long long solve_ms = 0;  // CPU time, so reports stay reproducible
};

struct ScenarioSummary {
  int scenario = 0;
  double mean_gain = 0.0;
  double min_gain = 0.0;
  double max_gain = 0.0;
};

struct ExperimentReport {
  std::vector<SampleResult> rows;  // (scenario, sample) order
  std::vector<ScenarioSummary> summaries;
};

// Full sweep: for every scenario size and sample index, draw a traffic
// sample, provision it both ways, color both lightpath sets and record one
// row. Deterministic for a fixed seed.
ExperimentReport run_experiment(const Topology& t,
                                const std::vector<int>& scenarios,
                                int num_samples, std::uint64_t seed,
                                bool fixed_sources = false);

// Both designs on one concrete demand set.
SampleResult compare_designs(const Topology& t, const DemandSet& ds,
                             int scenario = 0, int sample_index = 0,
                             std::uint64_t seed = 0);

ScenarioSummary summarize(int scenario, const std::vector<SampleResult>& rows);

// Row CSV: scenario,sample,seed,bypass_cost,agg_cost,gain,bypass_wl,agg_wl,pairs,ms
std::string report_csv(const ExperimentReport& report);
std::string sample_csv_header();
std::string sample_csv_row(const SampleResult& row);

// Plot-ready long format: scenario,sample,design,cost,wavelengths
std::string report_long_csv(const ExperimentReport& report);

}  // namespace aggnet
