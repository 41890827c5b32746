#include <doctest.h>

#include <map>
#include <set>

#include "aggnet/traffic.hpp"
#include "test_support.hpp"

using aggnet::Demand;
using aggnet::DemandSet;
using aggnet::NodeId;
using aggnet::ParseError;
using aggnet::ScenarioConfig;
using aggnet::ValidationError;

TEST_CASE("demand file grammar round-trips") {
  const DemandSet ds = aggnet::parse_demands("# sample\ndemand 11 1\ndemand 14 1\n");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Demand{0, 11, 1});
  CHECK(ds[1] == Demand{1, 14, 1});
  CHECK(aggnet::parse_demands(aggnet::serialize_demands(ds)).demands() == ds.demands());
}

TEST_CASE("empty demand list is valid") {
  const DemandSet ds = aggnet::parse_demands("# nothing here\n");
  CHECK(ds.empty());
  CHECK(aggnet::serialize_demands(ds).empty());
}

TEST_CASE("demand validation") {
  CHECK_THROWS_AS(aggnet::parse_demands("demand 5 5\n"), ValidationError);
  CHECK_THROWS_AS(aggnet::parse_demands("demand 1 2\ndemand 1 2\n"), ValidationError);
  CHECK_THROWS_AS(aggnet::parse_demands("demand 0 2\n"), ValidationError);
  CHECK_THROWS_AS(aggnet::parse_demands("demand 1\n"), ParseError);
  CHECK_THROWS_AS(aggnet::parse_demands("route 1 2\n"), ParseError);
}

TEST_CASE("two-to-many samples form the full cross-product") {
  const aggnet::Topology t = testsup::load_nsfnet();
  ScenarioConfig cfg;
  cfg.num_destinations = 4;
  cfg.seed = 7;

  for (int sample = 0; sample < 6; ++sample) {
    const DemandSet ds = aggnet::generate_two_to_many(t, cfg, sample);
    REQUIRE(ds.size() == 8);

    std::map<NodeId, int> src_count, dst_count;
    std::set<NodeId> sources, dests;
    for (const Demand& d : ds.demands()) {
      ++src_count[d.src];
      ++dst_count[d.dst];
      sources.insert(d.src);
      dests.insert(d.dst);
    }
    CHECK(sources.size() == 2);
    CHECK(dests.size() == 4);
    for (const auto& [s, n] : src_count) CHECK(n == cfg.num_destinations);
    for (const auto& [d, n] : dst_count) CHECK(n == cfg.num_sources);
    // Disjoint source and destination pools.
    for (NodeId s : sources) CHECK_FALSE(dests.count(s));
  }
}

TEST_CASE("generation is deterministic in (seed, sample)") {
  const aggnet::Topology t = testsup::load_nsfnet();
  ScenarioConfig cfg;
  cfg.num_destinations = 8;
  cfg.seed = 42;

  const DemandSet a = aggnet::generate_two_to_many(t, cfg, 3);
  const DemandSet b = aggnet::generate_two_to_many(t, cfg, 3);
  CHECK(a.demands() == b.demands());
  CHECK(aggnet::serialize_demands(a) == aggnet::serialize_demands(b));

  const DemandSet c = aggnet::generate_two_to_many(t, cfg, 4);
  CHECK(aggnet::serialize_demands(a) != aggnet::serialize_demands(c));
}

TEST_CASE("fixed sources pin the source pair across samples") {
  const aggnet::Topology t = testsup::load_nsfnet();
  ScenarioConfig cfg;
  cfg.num_destinations = 4;
  cfg.seed = 11;
  cfg.fixed_sources = true;

  std::set<std::set<NodeId>> source_sets;
  for (int sample = 0; sample < 5; ++sample) {
    const DemandSet ds = aggnet::generate_two_to_many(t, cfg, sample);
    std::set<NodeId> sources;
    for (const Demand& d : ds.demands()) sources.insert(d.src);
    source_sets.insert(sources);
  }
  CHECK(source_sets.size() == 1);
}

TEST_CASE("infeasible scenario sizes are rejected") {
  const aggnet::Topology t = testsup::load_nsfnet();
  ScenarioConfig cfg;
  cfg.num_destinations = 13;  // 2 + 13 > 14
  CHECK_THROWS_AS(aggnet::generate_two_to_many(t, cfg, 0), ValidationError);
  cfg.num_destinations = 0;
  CHECK_THROWS_AS(aggnet::generate_two_to_many(t, cfg, 0), ValidationError);
}
