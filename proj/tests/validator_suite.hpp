#pragma once

// Negative suite for the solution validator: one deliberately broken
// assignment per constraint family, each starting from a known-feasible
// encoding so only the targeted family (plus its knock-on effects) breaks.
// Returns human-readable failure strings; empty means the suite passed.

#include <string>
#include <vector>

#include "aggnet/exact_solver.hpp"
#include "aggnet/milp_model.hpp"
#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace testsup {

inline bool has_family_violation(const aggnet::MilpModel& m,
                                 const aggnet::MilpSolution& s,
                                 aggnet::ConstraintFamily family) {
  const std::string tag(aggnet::family_tag(family));
  for (const auto& v : aggnet::validate_solution(m, s))
    if (v.constraint.rfind(tag + "_", 0) == 0) return true;
  return false;
}

inline std::vector<std::string> run_validator_negative_suite() {
  using namespace aggnet;
  std::vector<std::string> failures;
  auto expect = [&failures](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // Three co-destined demands on a diamond so every family has room to
  // break: 1-2, 1-3, 2-4, 3-4, 4-5 plus a stub source 6-1.
  const Topology t = Topology::parse(
      "nodes 6\nlink 1 2\nlink 1 3\nlink 2 4\nlink 3 4\nlink 4 5\nlink 6 1\n");
  const DemandSet ds(std::vector<std::pair<NodeId, NodeId>>{{1, 4}, {2, 4}, {6, 4}});
  const MilpModel m = build_model(t, ds);

  const AggregationPlan plan = solve(t, ds);
  const MilpSolution feasible = encode_plan(m, plan);
  expect(validate_solution(m, feasible).empty(), "optimal plan should validate clean");

  const auto& cat = m.catalog;
  auto broken = [&feasible]() { return feasible; };

  {
    MilpSolution s = broken();  // erase demand 0's route entirely
    for (int e = 0; e < cat.num_links; ++e) s.assignment[cat.route(0, e)] = 0;
    expect(has_family_violation(m, s, ConstraintFamily::RouteFlow),
           "missing route must violate flow conservation");
  }
  {
    MilpSolution s = broken();  // two aggregation nodes for one demand
    s.assignment[cat.agg_node(0, 0)] = 1;
    s.assignment[cat.agg_node(0, 1)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::AggAtMostOnce),
           "double aggregation node must violate the at-most-once rule");
  }
  {
    MilpSolution s = broken();  // aggregation at the destination
    s.assignment[cat.agg_node(0, ds[0].dst - 1)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::AggNotAtDest),
           "aggregating at the destination must be reported");
  }
  {
    MilpSolution s = broken();  // demand 0 paired with both others
    s.assignment[cat.pairing(0, 1)] = 1;
    s.assignment[cat.pairing(0, 2)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::PairAtMostOne),
           "two partners must violate the single-partner rule");
  }
  {
    // Different destinations: rebuild with one stray demand to 5.
    const DemandSet mixed(
        std::vector<std::pair<NodeId, NodeId>>{{1, 4}, {2, 4}, {6, 5}});
    const MilpModel m2 = build_model(t, mixed);
    MilpSolution s = encode_plan(m2, solve(t, mixed));
    s.assignment[m2.catalog.pairing(0, 2)] = 1;
    s.assignment[m2.catalog.pairing(2, 0)] = 1;
    expect(has_family_violation(m2, s, ConstraintFamily::PairSameDestOnly),
           "cross-destination pairing must be reported");
  }
  {
    MilpSolution s = broken();  // asymmetric pairing
    s.assignment[cat.pairing(0, 1)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::PairSymmetry),
           "one-sided pairing must violate symmetry");
  }
  {
    MilpSolution s = broken();  // self pairing
    s.assignment[cat.pairing(2, 2)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::NoSelfPair),
           "self pairing must be reported");
  }
  {
    MilpSolution s = broken();  // aggregated link on the unpaired demand 1
    s.assignment[cat.agg_link(1, 0, 0)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::AggLinkNeedsPair),
           "aggregated link without a partner must be reported");
  }
  {
    MilpSolution s = broken();  // pairing without an aggregation node
    s.assignment[cat.pairing(1, 2)] = 1;
    s.assignment[cat.pairing(2, 1)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::PairImpliesAggNode),
           "pairing without an aggregation node must be reported");
  }
  {
    MilpSolution s = broken();  // partners disagreeing on the node
    s.assignment[cat.pairing(1, 2)] = 1;
    s.assignment[cat.pairing(2, 1)] = 1;
    s.assignment[cat.agg_node(1, 0)] = 1;
    s.assignment[cat.agg_node(2, 1)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::SameAggNodeA) ||
               has_family_violation(m, s, ConstraintFamily::SameAggNodeB),
           "pair with different aggregation nodes must be reported");
  }
  {
    MilpSolution s = broken();  // z on a link the route does not use
    int off_route = -1;
    for (int e = 0; e < cat.num_links; ++e)
      if (!s.assignment[cat.route(0, e)]) {
        off_route = e;
        break;
      }
    s.assignment[cat.agg_link(0, 0, off_route)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::AggOnRoute),
           "aggregated link off the demand route must be reported");
  }
  {
    MilpSolution s = broken();  // aggregation node claimed, no z-flow
    s.assignment[cat.pairing(0, 1)] = 1;
    s.assignment[cat.pairing(1, 0)] = 1;
    s.assignment[cat.agg_node(0, 0)] = 1;
    s.assignment[cat.agg_node(1, 0)] = 1;
    expect(has_family_violation(m, s, ConstraintFamily::AggFlow),
           "claimed aggregation without segment flow must be reported");
  }
  {
    // Strict mode: paired members on different equal-length segments.
    const DemandSet two(std::vector<std::pair<NodeId, NodeId>>{{1, 4}, {2, 4}});
    const MilpModel strict = build_model(t, two, /*strict_sharing=*/true);
    const auto& c2 = strict.catalog;
    MilpSolution s;
    s.assignment.assign(c2.size(), 0);
    auto link = [&t](NodeId a, NodeId b) { return t.link_index(a, b); };
    // demand 0: 1-2-4, aggregated segment 1-2-4 from node 1
    s.assignment[c2.route(0, link(1, 2))] = 1;
    s.assignment[c2.route(0, link(2, 4))] = 1;
    // demand 1: 2-1-3-4, aggregated segment 1-3-4 from node 1
    s.assignment[c2.route(1, link(2, 1))] = 1;
    s.assignment[c2.route(1, link(1, 3))] = 1;
    s.assignment[c2.route(1, link(3, 4))] = 1;
    s.assignment[c2.pairing(0, 1)] = 1;
    s.assignment[c2.pairing(1, 0)] = 1;
    s.assignment[c2.agg_node(0, 0)] = 1;
    s.assignment[c2.agg_node(1, 0)] = 1;
    s.assignment[c2.agg_link(0, 0, link(1, 2))] = 1;
    s.assignment[c2.agg_link(0, 0, link(2, 4))] = 1;
    s.assignment[c2.agg_link(1, 0, link(1, 3))] = 1;
    s.assignment[c2.agg_link(1, 0, link(3, 4))] = 1;
    s.objective_value = strict.objective_value(s.assignment);

    // Same catalog either way; strict mode only adds constraints.
    const MilpModel verbatim = build_model(t, two, /*strict_sharing=*/false);
    expect(validate_solution(verbatim, s).empty(),
           "divergent segments are feasible in the verbatim model");
    expect(has_family_violation(strict, s, ConstraintFamily::SharedSegmentA) ||
               has_family_violation(strict, s, ConstraintFamily::SharedSegmentB),
           "divergent segments must be reported in strict mode");
  }

  return failures;
}

}  // namespace testsup
