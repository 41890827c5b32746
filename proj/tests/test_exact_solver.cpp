#include <doctest.h>

#include <algorithm>

#include "aggnet/exact_solver.hpp"
#include "aggnet/provisioning.hpp"
#include "test_support.hpp"

using namespace aggnet;

TEST_CASE("alone costs are shortest-path hops") {
  const Topology t = testsup::load_nsfnet();
  CHECK(alone_cost(t, Demand{0, 11, 1}) == 2);
  CHECK(alone_cost(t, Demand{0, 14, 1}) == 3);
  CHECK(alone_cost(t, Demand{0, 11, 12}) == 1);
}

TEST_CASE("paired cost finds the cheapest merge point") {
  const Topology t = testsup::load_nsfnet();
  const PairedCost pc = paired_cost(t, Demand{0, 11, 1}, Demand{1, 14, 1});
  CHECK(pc.cost == 4);
  CHECK(pc.agg_node == 11);
  CHECK(pc.tie_count == 1);

  const Topology toy = testsup::load_toy();
  const PairedCost toy_pc = paired_cost(toy, Demand{0, 1, 5}, Demand{1, 2, 5});
  CHECK(toy_pc.cost == 4);
  CHECK(toy_pc.agg_node == 3);

  // Shared source: both feeders collapse at the source itself.
  const PairedCost same_src = paired_cost(t, Demand{0, 14, 1}, Demand{1, 14, 1});
  CHECK(same_src.cost == 3);
  CHECK(same_src.agg_node == 14);

  CHECK_THROWS_AS(paired_cost(t, Demand{0, 11, 1}, Demand{1, 14, 7}), ValidationError);
  CHECK_THROWS_AS(paired_cost(t, Demand{0, 11, 1}, Demand{0, 11, 1}), ValidationError);
}

TEST_CASE("paired cost table is symmetric and same-destination only") {
  const Topology t = testsup::load_nsfnet();
  const DemandSet ds = testsup::load_table1();
  const PairedCostTable table(t, ds);
  for (int d1 = 0; d1 < ds.size(); ++d1)
    for (int d2 = 0; d2 < ds.size(); ++d2) {
      if (d1 == d2 || ds[d1].dst != ds[d2].dst) {
        CHECK_FALSE(table.has_entry(d1, d2));
        continue;
      }
      REQUIRE(table.has_entry(d1, d2));
      CHECK(table.entry(d1, d2).cost == table.entry(d2, d1).cost);
      CHECK(table.entry(d1, d2).agg_node == table.entry(d2, d1).agg_node);
      CHECK(table.entry(d1, d2).cost >=
            std::max(alone_cost(t, ds[d1]), alone_cost(t, ds[d2])));
    }
  CHECK_THROWS_AS(table.entry(0, 1), ValidationError);  // 11->12 vs 11->10
}

TEST_CASE("reference instance: one pair at node 11, total 12") {
  const Topology t = testsup::load_nsfnet();
  const DemandSet ds = testsup::load_table1();
  const AggregationPlan plan = solve(t, ds);

  CHECK(plan.cost == 12);
  CHECK(plan_cost(plan) == 12);
  REQUIRE(plan.pairs.size() == 1);
  CHECK(plan.pairs[0].d1 == 2);
  CHECK(plan.pairs[0].d2 == 6);
  CHECK(plan.pairs[0].agg_node == 11);
  CHECK(plan.pairs[0].shared_segment.size() == 3);  // two hops

  // The detoured member spends four links; its partner keeps two.
  CHECK(plan.routes[6].size() == 5);
  CHECK(plan.routes[2].size() == 3);
  // Ties at destinations 12, 10 and 7 resolve to no aggregation.
  for (int d : {0, 1, 3, 4, 5, 7})
    CHECK(plan.pair_of(d) == -1);

  // Shared segment is a suffix of both member routes.
  for (int member : {plan.pairs[0].d1, plan.pairs[0].d2}) {
    const auto& route = plan.routes[member];
    const auto& seg = plan.pairs[0].shared_segment;
    REQUIRE(route.size() >= seg.size());
    CHECK(std::equal(seg.begin(), seg.end(), route.end() - seg.size()));
  }
}

TEST_CASE("toy instance pairs at the junction for cost 4") {
  const Topology t = testsup::load_toy();
  const AggregationPlan plan = solve(t, testsup::load_toy_demands());
  CHECK(plan.cost == 4);
  REQUIRE(plan.pairs.size() == 1);
  CHECK(plan.pairs[0].agg_node == 3);
  CHECK(plan.routes[0] == std::vector<NodeId>{1, 3, 4, 5});
  CHECK(plan.routes[1] == std::vector<NodeId>{2, 3, 4, 5});
}

TEST_CASE("empty demand set solves to an empty plan") {
  const Topology t = testsup::load_toy();
  const AggregationPlan plan = solve(t, DemandSet{});
  CHECK(plan.cost == 0);
  CHECK(plan.routes.empty());
  CHECK(plan.pairs.empty());
}

TEST_CASE("oversized destination groups hit the enumeration cap") {
  const Topology t = testsup::load_nsfnet();
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId s = 1; s <= 13; ++s) pairs.emplace_back(s, 14);
  const DemandSet ds(pairs);
  CHECK_THROWS_AS(solve(t, ds), CapacityError);
  CHECK_NOTHROW(solve(t, ds, 13));
}

TEST_CASE("solve result is invariant under demand reordering") {
  const Topology t = testsup::load_nsfnet();
  const DemandSet ds = testsup::load_table1();
  std::vector<std::pair<NodeId, NodeId>> shuffled;
  for (int d : {7, 2, 5, 0, 6, 1, 4, 3})
    shuffled.emplace_back(ds[d].src, ds[d].dst);
  const AggregationPlan plan = solve(t, DemandSet(shuffled));
  CHECK(plan.cost == 12);
  REQUIRE(plan.pairs.size() == 1);
  CHECK(plan.pairs[0].agg_node == 11);
  // Same pair by endpoints: positions 1 (11->1) and 4 (14->1) here.
  CHECK(plan.pairs[0].d1 == 1);
  CHECK(plan.pairs[0].d2 == 4);
}

TEST_CASE("plan encoding is feasible and reproduces the plan cost") {
  const Topology t = testsup::load_nsfnet();
  const DemandSet ds = testsup::load_table1();
  const MilpModel m = build_model(t, ds);

  const AggregationPlan plan = solve(t, ds);
  const MilpSolution sol = encode_plan(m, plan);
  CHECK(validate_solution(m, sol).empty());
  CHECK(sol.objective_value == doctest::Approx(12.0));

  const AggregationPlan bypass = route_bypass(t, ds);
  const MilpSolution bypass_sol = encode_plan(m, bypass);
  CHECK(validate_solution(m, bypass_sol).empty());
  CHECK(bypass_sol.objective_value == doctest::Approx(13.0));

  // Forbidden aggregation node: encoding succeeds, validation objects.
  AggregationPlan broken = plan;
  broken.pairs[0].agg_node = 1;  // the destination
  broken.pairs[0].shared_segment = {1};
  broken.routes[2] = t.shortest_path(11, 1);
  broken.routes[6] = t.shortest_path(14, 1);
  const MilpSolution bad = encode_plan(m, broken);
  bool saw_dest_rule = false;
  for (const auto& v : validate_solution(m, bad))
    if (v.constraint.rfind("agg_not_dst_", 0) == 0) saw_dest_rule = true;
  CHECK(saw_dest_rule);

  AggregationPlan mismatched = plan;
  mismatched.routes.pop_back();
  CHECK_THROWS_AS(encode_plan(m, mismatched), ValidationError);
}

TEST_CASE("solver matches the blunt oracle on random instances") {
  aggnet::SplitMix64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const Topology t = testsup::random_topology(rng);
    const DemandSet ds = testsup::random_demands(rng, t);
    const AggregationPlan plan = solve(t, ds);
    CHECK(plan.cost == testsup::oracle_best_cost(t, ds));
    CHECK(plan.cost == plan_cost(plan));
    CHECK(plan.cost <= route_bypass(t, ds).cost);

    for (const PlanPair& pair : plan.pairs) {
      const PairedCost pc = paired_cost(t, ds[pair.d1], ds[pair.d2]);
      CHECK(pc.cost >= std::max(alone_cost(t, ds[pair.d1]), alone_cost(t, ds[pair.d2])));

      // Physical consistency: the shared segment is a suffix of both routes.
      CHECK(pair.shared_segment.front() == pair.agg_node);
      CHECK(pair.shared_segment.back() == ds[pair.d1].dst);
      for (int member : {pair.d1, pair.d2}) {
        const auto& route = plan.routes[member];
        const auto& seg = pair.shared_segment;
        REQUIRE(route.size() >= seg.size());
        CHECK(std::equal(seg.begin(), seg.end(), route.end() - seg.size()));
      }
    }
  }
}
