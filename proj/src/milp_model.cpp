#include "aggnet/milp_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace aggnet {

namespace {

// Subscript letters per family, used when printing constraint names.
struct FamilyInfo {
  std::string_view tag;
  std::string_view sub_letters;
};

FamilyInfo family_info(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::RouteFlow: return {"flow", "dv"};
    case ConstraintFamily::AggAtMostOnce: return {"agg_once", "d"};
    case ConstraintFamily::AggNotAtDest: return {"agg_not_dst", "d"};
    case ConstraintFamily::PairAtMostOne: return {"pair_once", "d"};
    case ConstraintFamily::PairSameDestOnly: return {"pair_dst", "dd"};
    case ConstraintFamily::PairSymmetry: return {"pair_sym", "dd"};
    case ConstraintFamily::NoSelfPair: return {"no_self_pair", "d"};
    case ConstraintFamily::AggLinkNeedsPair: return {"agg_needs_pair", "de"};
    case ConstraintFamily::PairImpliesAggNode: return {"pair_has_node", "d"};
    case ConstraintFamily::SameAggNodeA: return {"same_node_a", "ddv"};
    case ConstraintFamily::SameAggNodeB: return {"same_node_b", "ddv"};
    case ConstraintFamily::AggOnRoute: return {"agg_on_route", "dve"};
    case ConstraintFamily::AggFlow: return {"agg_flow", "dvi"};
    case ConstraintFamily::SharedSegmentA: return {"share_a", "ddve"};
    case ConstraintFamily::SharedSegmentB: return {"share_b", "ddve"};
  }
  return {"unknown", ""};
}

std::string_view rel_text(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ge: return ">=";
  }
  return "?";
}

bool parse_int_field(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc{} && res.ptr == end && out >= 0;
}

}  // namespace

std::string_view family_tag(ConstraintFamily f) { return family_info(f).tag; }

std::string Constraint::name() const {
  const FamilyInfo info = family_info(family);
  std::string out(info.tag);
  for (size_t i = 0; i < info.sub_letters.size(); ++i) {
    out += '_';
    out += info.sub_letters[i];
    out += std::to_string(subs[i]);
  }
  return out;
}

std::string VariableCatalog::name(int var) const {
  const int x_block = num_demands * num_links;
  const int z_block = num_demands * num_nodes * num_links;
  const int t_block = num_demands * num_nodes;
  if (var < 0 || var >= size()) throw std::out_of_range("variable index");
  if (var < x_block) {
    const int d = var / num_links, e = var % num_links;
    return "x_" + std::to_string(d) + "_" + std::to_string(e);
  }
  var -= x_block;
  if (var < z_block) {
    const int e = var % num_links;
    const int dv = var / num_links;
    return "z_" + std::to_string(dv / num_nodes) + "_" + std::to_string(dv % num_nodes) +
           "_" + std::to_string(e);
  }
  var -= z_block;
  if (var < t_block) {
    return "t_" + std::to_string(var / num_nodes) + "_" + std::to_string(var % num_nodes);
  }
  var -= t_block;
  return "f_" + std::to_string(var / num_demands) + "_" + std::to_string(var % num_demands);
}

int VariableCatalog::index_of(std::string_view name) const {
  if (name.size() < 5 || name[1] != '_') return -1;
  const char kind = name[0];
  int fields[3] = {-1, -1, -1};
  int count = 0;
  std::string_view rest = name.substr(2);
  while (!rest.empty()) {
    if (count == 3) return -1;
    const size_t cut = rest.find('_');
    const std::string_view field = rest.substr(0, cut);
    if (!parse_int_field(field, fields[count])) return -1;
    ++count;
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + 1);
  }
  switch (kind) {
    case 'x':
      if (count != 2 || fields[0] >= num_demands || fields[1] >= num_links) return -1;
      return route(fields[0], fields[1]);
    case 'z':
      if (count != 3 || fields[0] >= num_demands || fields[1] >= num_nodes ||
          fields[2] >= num_links)
        return -1;
      return agg_link(fields[0], fields[1], fields[2]);
    case 't':
      if (count != 2 || fields[0] >= num_demands || fields[1] >= num_nodes) return -1;
      return agg_node(fields[0], fields[1]);
    case 'f':
      if (count != 2 || fields[0] >= num_demands || fields[1] >= num_demands) return -1;
      return pairing(fields[0], fields[1]);
    default:
      return -1;
  }
}

double MilpModel::objective_value(const std::vector<int>& assignment) const {
  const int x_end = catalog.num_demands * catalog.num_links;
  const int z_end = x_end + catalog.num_demands * catalog.num_nodes * catalog.num_links;
  long long twice = 0;
  for (int i = 0; i < x_end; ++i) twice += 2LL * assignment[i];
  for (int i = x_end; i < z_end; ++i) twice -= assignment[i];
  return static_cast<double>(twice) / 2.0;
}

MilpModel build_model(const Topology& t, const DemandSet& ds, bool strict_sharing) {
  if (ds.empty())
    throw ValidationError("cannot build a model for an empty demand set");

  MilpModel m;
  m.catalog = VariableCatalog{ds.size(), t.node_count(), t.link_count()};
  m.strict_sharing = strict_sharing;
  m.demands = ds.demands();
  m.links = t.links();
  m.num_nodes = t.node_count();

  const int D = ds.size();
  const int V = t.node_count();
  const int E = t.link_count();
  const VariableCatalog& cat = m.catalog;

  std::vector<std::vector<int>> out_links(V + 1), in_links(V + 1);
  for (int e = 0; e < E; ++e) {
    out_links[m.links[e].src].push_back(e);
    in_links[m.links[e].dst].push_back(e);
  }

  auto add = [&m](ConstraintFamily fam, std::array<int, 4> subs,
                  std::vector<LinearTerm> terms, Rel rel, long long rhs) {
    m.constraints.push_back(Constraint{fam, subs, std::move(terms), rel, rhs});
  };

  // Per-demand flow conservation on the route variables.
  for (int d = 0; d < D; ++d) {
    for (NodeId v = 1; v <= V; ++v) {
      std::vector<LinearTerm> terms;
      for (int e : out_links[v]) terms.push_back({cat.route(d, e), +1});
      for (int e : in_links[v]) terms.push_back({cat.route(d, e), -1});
      long long rhs = 0;
      if (v == m.demands[d].src) rhs = 1;
      else if (v == m.demands[d].dst) rhs = -1;
      add(ConstraintFamily::RouteFlow, {d, v - 1}, std::move(terms), Rel::Eq, rhs);
    }
  }

  // At most one aggregation node per demand, never the destination.
  for (int d = 0; d < D; ++d) {
    std::vector<LinearTerm> terms;
    for (int v = 0; v < V; ++v) terms.push_back({cat.agg_node(d, v), +1});
    add(ConstraintFamily::AggAtMostOnce, {d}, std::move(terms), Rel::Le, 1);
  }
  for (int d = 0; d < D; ++d)
    add(ConstraintFamily::AggNotAtDest, {d},
        {{cat.agg_node(d, m.demands[d].dst - 1), +1}}, Rel::Eq, 0);

  // Each demand pairs with at most one partner, same destination only,
  // symmetrically, and never with itself.
  for (int d1 = 0; d1 < D; ++d1) {
    std::vector<LinearTerm> terms;
    for (int d2 = 0; d2 < D; ++d2) terms.push_back({cat.pairing(d1, d2), +1});
    add(ConstraintFamily::PairAtMostOne, {d1}, std::move(terms), Rel::Le, 1);
  }
  int cross_dest_pairs = 0;
  for (int d1 = 0; d1 < D; ++d1)
    for (int d2 = 0; d2 < D; ++d2)
      if (d1 != d2 && m.demands[d1].dst != m.demands[d2].dst) {
        add(ConstraintFamily::PairSameDestOnly, {d1, d2},
            {{cat.pairing(d1, d2), +1}}, Rel::Eq, 0);
        ++cross_dest_pairs;
      }
  for (int d1 = 0; d1 < D; ++d1)
    for (int d2 = d1 + 1; d2 < D; ++d2)
      add(ConstraintFamily::PairSymmetry, {d1, d2},
          {{cat.pairing(d1, d2), +1}, {cat.pairing(d2, d1), -1}}, Rel::Eq, 0);
  for (int d = 0; d < D; ++d)
    add(ConstraintFamily::NoSelfPair, {d}, {{cat.pairing(d, d), +1}}, Rel::Eq, 0);

  // Aggregated links exist only for paired demands.
  for (int d1 = 0; d1 < D; ++d1) {
    for (int e = 0; e < E; ++e) {
      std::vector<LinearTerm> terms;
      for (int v = 0; v < V; ++v) terms.push_back({cat.agg_link(d1, v, e), +1});
      for (int d2 = 0; d2 < D; ++d2) terms.push_back({cat.pairing(d1, d2), -1});
      add(ConstraintFamily::AggLinkNeedsPair, {d1, e}, std::move(terms), Rel::Le, 0);
    }
  }

  // Pairing and aggregation-node choice go together.
  for (int d1 = 0; d1 < D; ++d1) {
    std::vector<LinearTerm> terms;
    for (int d2 = 0; d2 < D; ++d2) terms.push_back({cat.pairing(d1, d2), +1});
    for (int v = 0; v < V; ++v) terms.push_back({cat.agg_node(d1, v), -1});
    add(ConstraintFamily::PairImpliesAggNode, {d1}, std::move(terms), Rel::Eq, 0);
  }

  // Paired demands aggregate at the same node.
  for (int d1 = 0; d1 < D; ++d1)
    for (int d2 = d1 + 1; d2 < D; ++d2)
      for (int v = 0; v < V; ++v) {
        add(ConstraintFamily::SameAggNodeA, {d1, d2, v},
            {{cat.agg_node(d1, v), +1},
             {cat.agg_node(d2, v), -1},
             {cat.pairing(d1, d2), +1}},
            Rel::Le, 1);
        add(ConstraintFamily::SameAggNodeB, {d1, d2, v},
            {{cat.agg_node(d2, v), +1},
             {cat.agg_node(d1, v), -1},
             {cat.pairing(d1, d2), +1}},
            Rel::Le, 1);
      }

  // The aggregated lightpath rides the demand's own route.
  for (int d = 0; d < D; ++d)
    for (int v = 0; v < V; ++v)
      for (int e = 0; e < E; ++e)
        add(ConstraintFamily::AggOnRoute, {d, v, e},
            {{cat.agg_link(d, v, e), +1}, {cat.route(d, e), -1}}, Rel::Le, 0);

  // Flow conservation for the aggregated segment: sources at the chosen
  // aggregation node, sinks at the demand destination.
  for (int d = 0; d < D; ++d) {
    for (int v = 0; v < V; ++v) {
      for (NodeId i = 1; i <= V; ++i) {
        std::vector<LinearTerm> terms;
        for (int e : out_links[i]) terms.push_back({cat.agg_link(d, v, e), +1});
        for (int e : in_links[i]) terms.push_back({cat.agg_link(d, v, e), -1});
        if (i == v + 1)
          terms.push_back({cat.agg_node(d, v), -1});
        else if (i == m.demands[d].dst)
          terms.push_back({cat.agg_node(d, v), +1});
        add(ConstraintFamily::AggFlow, {d, v, static_cast<int>(i) - 1}, std::move(terms),
            Rel::Eq, 0);
      }
    }
  }

  // Optional: force paired demands onto one identical aggregated segment.
  int same_dest_pairs = 0;
  if (strict_sharing) {
    for (int d1 = 0; d1 < D; ++d1)
      for (int d2 = d1 + 1; d2 < D; ++d2) {
        if (m.demands[d1].dst != m.demands[d2].dst) continue;
        ++same_dest_pairs;
        for (int v = 0; v < V; ++v)
          for (int e = 0; e < E; ++e) {
            add(ConstraintFamily::SharedSegmentA, {d1, d2, v, e},
                {{cat.agg_link(d1, v, e), +1},
                 {cat.agg_link(d2, v, e), -1},
                 {cat.pairing(d1, d2), +1}},
                Rel::Le, 1);
            add(ConstraintFamily::SharedSegmentB, {d1, d2, v, e},
                {{cat.agg_link(d2, v, e), +1},
                 {cat.agg_link(d1, v, e), -1},
                 {cat.pairing(d1, d2), +1}},
                Rel::Le, 1);
          }
      }
  }

  const long long pairs_uno = static_cast<long long>(D) * (D - 1) / 2;
  long long expected = static_cast<long long>(D) * V      // flow
                       + D                                // agg_once
                       + D                                // agg_not_dst
                       + D                                // pair_once
                       + cross_dest_pairs                 // pair_dst
                       + pairs_uno                        // pair_sym
                       + D                                // no_self_pair
                       + static_cast<long long>(D) * E    // agg_needs_pair
                       + D                                // pair_has_node
                       + 2 * pairs_uno * V                // same_node a+b
                       + static_cast<long long>(D) * V * E  // agg_on_route
                       + static_cast<long long>(D) * V * V; // agg_flow
  if (strict_sharing) expected += 2LL * same_dest_pairs * V * E;

  std::ostringstream note;
  note << "constraints = D*V + 5D + P_x + D(D-1)/2 + D*E + V*D(D-1) + D*V*E + D*V^2";
  if (strict_sharing) note << " + 2*P_s*V*E";
  note << " = " << m.constraints.size() << " with D=" << D << " V=" << V << " E=" << E
       << " P_x(cross-dest ordered pairs)=" << cross_dest_pairs;
  if (strict_sharing) note << " P_s(same-dest pairs)=" << same_dest_pairs;
  m.constraint_count_note = note.str();

  if (expected != static_cast<long long>(m.constraints.size()))
    throw std::logic_error("constraint count mismatch: " + m.constraint_count_note);
  return m;
}

std::string write_lp(const MilpModel& m) {
  const VariableCatalog& cat = m.catalog;
  std::ostringstream out;
  out << "\\ wavelength-link minimization with pairwise aggregation\n";
  out << "\\ demands=" << cat.num_demands << " nodes=" << cat.num_nodes
      << " links=" << cat.num_links << " vars=" << cat.size()
      << " strict_sharing=" << (m.strict_sharing ? 1 : 0) << "\n";
  if (!m.constraint_count_note.empty()) out << "\\ " << m.constraint_count_note << "\n";

  // Tokens are joined with wrapping so no line grows past ~200 chars.
  size_t column = 0;
  auto emit = [&out, &column](const std::string& token) {
    if (column + token.size() + 1 > 200) {
      out << "\n ";
      column = 1;
    }
    out << ' ' << token;
    column += token.size() + 1;
  };

  out << "Minimize\n obj:";
  column = 5;
  const int x_count = cat.num_demands * cat.num_links;
  const int z_count = cat.num_demands * cat.num_nodes * cat.num_links;
  for (int i = 0; i < x_count; ++i) {
    if (i > 0) emit("+");
    emit(cat.name(i));
  }
  for (int i = 0; i < z_count; ++i) {
    emit("-");
    emit("0.5 " + cat.name(x_count + i));
  }
  out << "\n";

  if (!m.constraints.empty()) {
    out << "Subject To\n";
    for (const Constraint& c : m.constraints) {
      out << " " << c.name() << ":";
      column = c.name().size() + 2;
      bool first = true;
      for (const LinearTerm& term : c.terms) {
        std::string tok;
        if (term.coeff < 0) {
          emit("-");
        } else if (!first) {
          emit("+");
        }
        const int mag = std::abs(term.coeff);
        if (mag != 1) tok = std::to_string(mag) + " ";
        tok += cat.name(term.var);
        emit(tok);
        first = false;
      }
      emit(std::string(rel_text(c.rel)));
      emit(std::to_string(c.rhs));
      out << "\n";
    }
  }

  out << "Binaries\n";
  for (int i = 0; i < cat.size(); ++i) out << " " << cat.name(i) << "\n";
  out << "End\n";
  return out.str();
}

std::string write_model_map(const MilpModel& m) {
  const VariableCatalog& cat = m.catalog;
  std::ostringstream out;
  out << "# variable index map for the LP export\n";
  out << "# blocks: x_{d}_{e}, z_{d}_{v}_{e}, t_{d}_{v}, f_{d1}_{d2}\n";
  out << "# d = demand id, e = link index, v = node index (node id - 1)\n";
  out << "strict_sharing " << (m.strict_sharing ? 1 : 0) << "\n";
  out << "demands " << cat.num_demands << "\n";
  out << "nodes " << cat.num_nodes << "\n";
  out << "links " << cat.num_links << "\n";
  out << "vars " << cat.size() << "\n";
  out << "constraints " << m.constraints.size() << "\n";
  for (const Demand& d : m.demands)
    out << "demand " << d.id << " " << d.src << " " << d.dst << "\n";
  for (size_t e = 0; e < m.links.size(); ++e)
    out << "link " << e << " " << m.links[e].src << " " << m.links[e].dst << "\n";
  return out.str();
}

bool model_map_strict_flag(const std::string& map_text) {
  std::istringstream in(map_text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::istringstream fields(raw.substr(0, raw.find('#')));
    std::string keyword;
    int value = 0;
    if (fields >> keyword >> value && keyword == "strict_sharing") return value != 0;
  }
  throw ParseError("model map is missing the strict_sharing line");
}

void verify_model_map(const MilpModel& m, const std::string& map_text) {
  const std::string expected = write_model_map(m);
  if (map_text == expected) return;

  // Pinpoint the first differing line for the error message.
  std::istringstream got(map_text), want(expected);
  std::string got_line, want_line;
  int line_no = 0;
  while (true) {
    ++line_no;
    const bool has_got = static_cast<bool>(std::getline(got, got_line));
    const bool has_want = static_cast<bool>(std::getline(want, want_line));
    if (!has_got && !has_want) break;
    if (!has_got || !has_want || got_line != want_line)
      throw ValidationError("model map mismatch at line " + std::to_string(line_no) +
                            ": expected '" + (has_want ? want_line : "<eof>") +
                            "', got '" + (has_got ? got_line : "<eof>") + "'");
  }
  throw ValidationError("model map does not match this instance");
}

MilpSolution read_solution(const MilpModel& m, const std::string& text) {
  const VariableCatalog& cat = m.catalog;
  const int total = cat.size();
  MilpSolution sol;
  sol.assignment.assign(total, 0);
  std::vector<char> seen(total, 0);

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::replace(line.begin(), line.end(), '=', ' ');
    std::istringstream fields(line);
    std::string name, value_text;
    if (!(fields >> name)) continue;
    if (!(fields >> value_text) || !(fields >> std::ws).eof())
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": expected 'name value', got '" + raw + "'");

    const int var = cat.index_of(name);
    if (var < 0)
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": unknown variable '" + name + "'");
    if (seen[var])
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": duplicate assignment for '" + name + "'");

    double value = 0.0;
    const char* begin = value_text.data();
    const char* end = begin + value_text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": bad numeric value '" + value_text + "'");

    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-6 || (rounded != 0.0 && rounded != 1.0))
      throw ValidationError("solution line " + std::to_string(line_no) + ": value " +
                            value_text + " for '" + name +
                            "' is not binary within 1e-6");
    sol.assignment[var] = static_cast<int>(rounded);
    seen[var] = 1;
  }

  const auto missing = std::find(seen.begin(), seen.end(), 0);
  if (missing != seen.end()) {
    const int count = static_cast<int>(std::count(seen.begin(), seen.end(), 0));
    throw ValidationError("solution is missing " + std::to_string(count) +
                          " variable(s), first: " +
                          cat.name(static_cast<int>(missing - seen.begin())));
  }

  sol.objective_value = m.objective_value(sol.assignment);
  return sol;
}

std::vector<ConstraintViolation> validate_solution(const MilpModel& m,
                                                   const MilpSolution& s) {
  if (static_cast<int>(s.assignment.size()) != m.catalog.size())
    throw ValidationError("assignment size does not match the variable catalog");
  std::vector<ConstraintViolation> out;
  for (const Constraint& c : m.constraints) {
    long long lhs = 0;
    for (const LinearTerm& term : c.terms)
      lhs += static_cast<long long>(term.coeff) * s.assignment[term.var];
    const bool ok = (c.rel == Rel::Le && lhs <= c.rhs) ||
                    (c.rel == Rel::Eq && lhs == c.rhs) ||
                    (c.rel == Rel::Ge && lhs >= c.rhs);
    if (!ok) out.push_back(ConstraintViolation{c.name(), lhs, c.rel, c.rhs});
  }
  return out;
}

namespace {

// Follows chosen edges from `from` until `to`, consuming each edge once and
// preferring the smallest next node, then cuts any loops out of the walk.
std::vector<NodeId> trace_path(const std::vector<int>& chosen_links,
                               const std::vector<Link>& links, NodeId from, NodeId to,
                               const std::string& what) {
  std::map<NodeId, std::vector<NodeId>> out_edges;
  for (int e : chosen_links) out_edges[links[e].src].push_back(links[e].dst);
  for (auto& [node, dsts] : out_edges) std::sort(dsts.begin(), dsts.end());

  std::vector<NodeId> walk{from};
  NodeId cur = from;
  size_t steps = 0;
  const size_t max_steps = chosen_links.size();
  while (cur != to) {
    auto it = out_edges.find(cur);
    if (it == out_edges.end() || it->second.empty() || steps == max_steps)
      throw DecodeError(what + ": selected links contain no path " +
                        std::to_string(from) + "->" + std::to_string(to));
    cur = it->second.front();
    it->second.erase(it->second.begin());
    walk.push_back(cur);
    ++steps;
  }

  // Drop loops: keep the prefix up to the first visit of a repeated node.
  std::vector<NodeId> path;
  for (NodeId v : walk) {
    const auto seen = std::find(path.begin(), path.end(), v);
    if (seen != path.end())
      path.erase(seen + 1, path.end());
    else
      path.push_back(v);
  }
  return path;
}

}  // namespace

AggregationPlan decode_plan(const MilpModel& m, const MilpSolution& s) {
  const VariableCatalog& cat = m.catalog;
  const int D = cat.num_demands;
  const int V = cat.num_nodes;
  const int E = cat.num_links;

  AggregationPlan plan;
  plan.routes.resize(D);

  for (int d = 0; d < D; ++d) {
    std::vector<int> chosen;
    for (int e = 0; e < E; ++e)
      if (s.assignment[cat.route(d, e)]) chosen.push_back(e);
    plan.routes[d] = trace_path(chosen, m.links, m.demands[d].src, m.demands[d].dst,
                                "demand " + std::to_string(d));
  }

  for (int d1 = 0; d1 < D; ++d1) {
    for (int d2 = d1 + 1; d2 < D; ++d2) {
      if (!s.assignment[cat.pairing(d1, d2)]) continue;
      int v1 = -1, v2 = -1;
      for (int v = 0; v < V; ++v) {
        if (s.assignment[cat.agg_node(d1, v)]) v1 = v;
        if (s.assignment[cat.agg_node(d2, v)]) v2 = v;
      }
      if (v1 < 0 || v1 != v2)
        throw DecodeError("pair (" + std::to_string(d1) + "," + std::to_string(d2) +
                          ") lacks a common aggregation node");

      std::vector<int> seg1, seg2;
      for (int e = 0; e < E; ++e) {
        if (s.assignment[cat.agg_link(d1, v1, e)]) seg1.push_back(e);
        if (s.assignment[cat.agg_link(d2, v1, e)]) seg2.push_back(e);
      }
      if (seg1 != seg2) plan.non_physical_sharing = true;

      PlanPair pair;
      pair.d1 = d1;
      pair.d2 = d2;
      pair.agg_node = v1 + 1;
      pair.shared_segment = trace_path(seg1, m.links, v1 + 1, m.demands[d1].dst,
                                       "pair (" + std::to_string(d1) + "," +
                                           std::to_string(d2) + ")");
      plan.pairs.push_back(std::move(pair));
    }
  }

  plan.cost = plan_cost(plan);
  return plan;
}

}  // namespace aggnet
