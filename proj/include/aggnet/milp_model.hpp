#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "aggnet/plan.hpp"
#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace aggnet {

// Dense numbering of the four binary variable blocks:
//   x_{d}_{e}      route indicator            block [0, D*E)
//   z_{d}_{v}_{e}  aggregated-lightpath link  block [D*E, D*E + D*V*E)
//   t_{d}_{v}      aggregation-node pick      next D*V
//   f_{d1}_{d2}    pairing indicator          last D*D
// d = demand id, e = link index, v = node index (node id - 1).
struct VariableCatalog {
  int num_demands = 0;
  int num_nodes = 0;
  int num_links = 0;

  int size() const {
    return num_demands * num_links + num_demands * num_nodes * num_links +
           num_demands * num_nodes + num_demands * num_demands;
  }
  int route(int d, int e) const { return d * num_links + e; }
  int agg_link(int d, int v, int e) const {
    return num_demands * num_links + (d * num_nodes + v) * num_links + e;
  }
  int agg_node(int d, int v) const {
    return num_demands * num_links * (1 + num_nodes) + d * num_nodes + v;
  }
  int pairing(int d1, int d2) const {
    return num_demands * num_links * (1 + num_nodes) + num_demands * num_nodes +
           d1 * num_demands + d2;
  }

  std::string name(int var) const;
  // Inverse of name(); -1 when the string is not a catalog variable.
  int index_of(std::string_view name) const;
};

enum class Rel { Le, Eq, Ge };

enum class ConstraintFamily {
  RouteFlow,          // per-demand flow conservation
  AggAtMostOnce,      // sum_v theta <= 1
  AggNotAtDest,       // theta at the demand destination = 0
  PairAtMostOne,      // sum_d2 f <= 1
  PairSameDestOnly,   // f = 0 across different destinations
  PairSymmetry,       // f[d1][d2] = f[d2][d1]
  NoSelfPair,         // f[d][d] = 0
  AggLinkNeedsPair,   // sum_v z per link <= sum_d2 f
  PairImpliesAggNode, // sum_d2 f = sum_v theta
  SameAggNodeA,       // theta[d1][v] - theta[d2][v] + f <= 1
  SameAggNodeB,       // mirror of the above
  AggOnRoute,         // z <= x
  AggFlow,            // aggregated-segment flow conservation
  SharedSegmentA,     // strict mode: z[d1] - z[d2] <= 1 - f
  SharedSegmentB,     // strict mode mirror
};

std::string_view family_tag(ConstraintFamily f);

struct LinearTerm {
  int var = 0;
  int coeff = 0;
};

struct Constraint {
  ConstraintFamily family;
  std::array<int, 4> subs = {-1, -1, -1, -1};  // family-specific subscripts
  std::vector<LinearTerm> terms;
  Rel rel = Rel::Eq;
  long long rhs = 0;

  std::string name() const;
};

struct MilpModel {
  VariableCatalog catalog;
  std::vector<Constraint> constraints;
  bool strict_sharing = false;

  // Instance data the model was built from, kept so solutions can be
  // decoded and the sidecar map emitted without the original objects.
  std::vector<Demand> demands;
  std::vector<Link> links;
  int num_nodes = 0;

  // Human-readable closed form for the constraint count; emitted as a
  // comment in the LP export.
  std::string constraint_count_note;

  // Objective is fixed by construction: +1 on every x, -1/2 on every z.
  // Evaluated exactly in half-units.
  double objective_value(const std::vector<int>& assignment) const;
};

struct MilpSolution {
  std::vector<int> assignment;  // 0/1 per catalog variable
  double objective_value = 0.0;
};

struct ConstraintViolation {
  std::string constraint;
  long long lhs = 0;
  Rel rel = Rel::Eq;
  long long rhs = 0;
};

MilpModel build_model(const Topology& t, const DemandSet& ds,
                      bool strict_sharing = false);

// Standard LP text (Minimize / Subject To / Binaries / End). Byte-stable
// for a fixed model.
std::string write_lp(const MilpModel& m);

// Sidecar documenting the dense index spaces (demand, node, link tables)
// plus the variable block layout, so external solutions can be checked
// against the exact instance they were produced for.
std::string write_model_map(const MilpModel& m);

// Reads the strict_sharing flag out of a sidecar map (needed before the
// model can be rebuilt).
bool model_map_strict_flag(const std::string& map_text);

// Throws ValidationError when the sidecar does not describe this model
// (different counts, demand table, or link table).
void verify_model_map(const MilpModel& m, const std::string& map_text);

// Parses "name value" (or "name=value") lines, one per catalog variable.
// Values within 1e-6 of an integer are rounded; anything else is an
// integrality error. Missing or unknown variables are errors. The stored
// objective is recomputed from the assignment, never trusted from the file.
MilpSolution read_solution(const MilpModel& m, const std::string& text);

// Evaluates every constraint in exact integer arithmetic; violations are
// returned, not thrown.
std::vector<ConstraintViolation> validate_solution(const MilpModel& m,
                                                   const MilpSolution& s);

// Turns a feasible assignment back into routes, pairing, aggregation nodes
// and shared segments. Cycles disjoint from a demand's source->destination
// path are pruned. Paired members whose aggregated segments differ get the
// plan flagged non_physical_sharing.
AggregationPlan decode_plan(const MilpModel& m, const MilpSolution& s);

}  // namespace aggnet
