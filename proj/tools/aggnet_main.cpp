// aggnet - wavelength-link planning with pairwise optical aggregation.
//
// Subcommands cover the full workflow: traffic generation, bypass and
// aggregation-aware provisioning, LP export for external solvers, solution
// import/validation, and the two-to-many comparison experiment.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aggnet/exact_solver.hpp"
#include "aggnet/experiment.hpp"
#include "aggnet/milp_model.hpp"
#include "aggnet/provisioning.hpp"
#include "aggnet/topology.hpp"
#include "aggnet/traffic.hpp"

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw aggnet::ParseError("cannot open output file: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aggnet::ParseError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

json plan_json(const aggnet::AggregationPlan& plan, const aggnet::DemandSet& ds,
               const std::vector<std::string>& wl_labels) {
  json rows = json::array();
  for (const aggnet::Demand& d : ds.demands()) {
    json row;
    row["demand"] = std::to_string(d.src) + "->" + std::to_string(d.dst);
    row["route"] = plan.routes[d.id];
    const int pi = plan.pair_of(d.id);
    if (pi >= 0) {
      const aggnet::PlanPair& pair = plan.pairs[pi];
      const aggnet::Demand& partner = ds[pair.d1 == d.id ? pair.d2 : pair.d1];
      row["agg_node"] = pair.agg_node;
      row["agg_links"] = pair.shared_segment;
      row["with_demand"] = std::to_string(partner.src) + "->" + std::to_string(partner.dst);
    } else {
      row["agg_node"] = nullptr;
      row["agg_links"] = nullptr;
      row["with_demand"] = nullptr;
    }
    if (!wl_labels.empty()) row["wavelength"] = wl_labels[d.id];
    rows.push_back(row);
  }
  return rows;
}

json sample_json(const aggnet::SampleResult& r) {
  return json{{"scenario", r.scenario},
              {"sample", r.sample_index},
              {"seed", r.seed},
              {"bypass_cost", r.bypass_cost},
              {"agg_cost", r.agg_cost},
              {"gain", r.gain},
              {"bypass_wl", r.bypass_wavelengths},
              {"agg_wl", r.agg_wavelengths},
              {"pairs", r.num_pairs},
              {"ms", r.solve_ms}};
}

// Shared output path for bypass/solve: plan rows plus the cost summary.
void print_plan(const aggnet::Topology& topo, const aggnet::DemandSet& ds,
                const aggnet::AggregationPlan& plan, const std::string& format,
                const std::string& out_path) {
  const auto lps = aggnet::extract_lightpaths(plan);
  const auto wa = aggnet::assign_wavelengths_first_fit(topo, lps);
  const auto labels = aggnet::wavelength_labels(plan, lps, wa);

  if (format == "json") {
    json doc;
    doc["plan"] = plan_json(plan, ds, labels);
    doc["cost"] = plan.cost;
    doc["wavelengths"] = wa.count;
    doc["pairs"] = plan.pairs.size();
    if (plan.non_physical_sharing) doc["non_physical_sharing"] = true;
    emit(doc.dump(2) + "\n", out_path);
    return;
  }

  std::string text = aggnet::plan_to_csv(plan, ds, labels);
  text += "# cost " + std::to_string(plan.cost) + "\n";
  text += "# wavelengths " + std::to_string(wa.count) + "\n";
  text += "# pairs " + std::to_string(plan.pairs.size()) + "\n";
  if (plan.non_physical_sharing) text += "# warning non-physical sharing\n";
  for (int e : aggnet::overloaded_links(topo, lps))
    text += "# warning link " + std::to_string(topo.links()[e].src) + "->" +
            std::to_string(topo.links()[e].dst) + " exceeds 80 channels\n";
  emit(text, out_path);
}

int scenario_of(const aggnet::DemandSet& ds) {
  std::set<aggnet::NodeId> dests;
  for (const aggnet::Demand& d : ds.demands()) dests.insert(d.dst);
  return static_cast<int>(dests.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavelength-link planner with pairwise optical aggregation"};
  app.require_subcommand(1);

  std::string topology_path, demands_path, out_path, map_path, sol_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
  int dests = 4, sources = 2, sample = 0, samples = 10;
  bool strict = false, fixed_sources = false, validate = false;
  std::vector<int> scenarios{4, 8, 12};

  auto add_common = [&](CLI::App* cmd, bool with_demands) {
    cmd->add_option("--topology", topology_path, "topology file")->required();
    if (with_demands)
      cmd->add_option("--demands", demands_path, "demand file")->required();
  };

  CLI::App* gen = app.add_subcommand("gen-traffic", "draw a two-to-many traffic sample");
  add_common(gen, false);
  gen->add_option("--dests", dests, "number of destination nodes")->required();
  gen->add_option("--sources", sources, "number of source nodes (default 2)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--sample", sample, "sample index");
  gen->add_flag("--fixed-sources", fixed_sources,
                "draw sources independent of the sample index");
  gen->add_option("--out", out_path, "output demand file (default stdout)");

  CLI::App* bypass = app.add_subcommand("bypass", "shortest-path provisioning");
  add_common(bypass, true);
  bypass->add_option("--out", out_path, "output file (default stdout)");
  bypass->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* solve_cmd = app.add_subcommand("solve", "aggregation-aware provisioning");
  add_common(solve_cmd, true);
  solve_cmd->add_option("--out", out_path, "output file (default stdout)");
  solve_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_flag("--strict-sharing", strict,
                      "use the strict-sharing model for --validate");
  solve_cmd->add_flag("--validate", validate,
                      "re-check the plan against the full constraint set");

  CLI::App* export_lp = app.add_subcommand("export-lp", "write the instance as an LP file");
  add_common(export_lp, true);
  export_lp->add_option("--out", out_path, "LP output path")->required();
  export_lp->add_option("--map", map_path, "sidecar map path (default OUT.map)");
  export_lp->add_flag("--strict-sharing", strict, "add identical-segment constraints");

  CLI::App* import_sol = app.add_subcommand("import-sol", "validate and decode a solution");
  add_common(import_sol, true);
  import_sol->add_option("--model-map", map_path, "sidecar map from export-lp")->required();
  import_sol->add_option("--sol", sol_path, "solver output, 'name value' lines")->required();
  import_sol->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* compare = app.add_subcommand("compare", "bypass vs aggregation on one sample");
  add_common(compare, true);
  compare->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* experiment = app.add_subcommand("experiment", "full two-to-many sweep");
  add_common(experiment, false);
  experiment->add_option("--scenarios", scenarios, "destination counts")->delimiter(',');
  experiment->add_option("--samples", samples, "samples per scenario");
  experiment->add_option("--seed", seed, "random seed");
  experiment->add_flag("--fixed-sources", fixed_sources,
                       "pin the two sources across samples");
  experiment->add_option("--out", out_path, "report CSV path")->required();
  experiment->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const aggnet::Topology topo = aggnet::Topology::load(topology_path);

    if (gen->parsed()) {
      aggnet::ScenarioConfig cfg;
      cfg.num_sources = sources;
      cfg.num_destinations = dests;
      cfg.seed = seed;
      cfg.fixed_sources = fixed_sources;
      const aggnet::DemandSet ds = aggnet::generate_two_to_many(topo, cfg, sample);
      std::string text = "# two-to-many sample\n# seed " + std::to_string(seed) +
                         " sample " + std::to_string(sample) + "\n" +
                         aggnet::serialize_demands(ds);
      emit(text, out_path);
    } else if (bypass->parsed()) {
      const aggnet::DemandSet ds = aggnet::DemandSet::load(demands_path);
      print_plan(topo, ds, aggnet::route_bypass(topo, ds), format, out_path);
    } else if (solve_cmd->parsed()) {
      const aggnet::DemandSet ds = aggnet::DemandSet::load(demands_path);
      const aggnet::AggregationPlan plan = aggnet::solve(topo, ds);
      if (validate) {
        const aggnet::MilpModel model = aggnet::build_model(topo, ds, strict);
        const aggnet::MilpSolution encoded = aggnet::encode_plan(model, plan);
        const auto violations = aggnet::validate_solution(model, encoded);
        if (!violations.empty())
          throw std::logic_error("plan failed model validation: " +
                                 violations.front().constraint);
        std::cerr << "validated: plan satisfies all " << model.constraints.size()
                  << " constraints, objective " << encoded.objective_value << "\n";
      }
      print_plan(topo, ds, plan, format, out_path);
    } else if (export_lp->parsed()) {
      const aggnet::DemandSet ds = aggnet::DemandSet::load(demands_path);
      const aggnet::MilpModel model = aggnet::build_model(topo, ds, strict);
      write_file(out_path, aggnet::write_lp(model));
      if (map_path.empty()) map_path = out_path + ".map";
      write_file(map_path, aggnet::write_model_map(model));
      std::cout << "wrote " << out_path << " (" << model.catalog.size() << " variables, "
                << model.constraints.size() << " constraints) and " << map_path << "\n";
    } else if (import_sol->parsed()) {
      const aggnet::DemandSet ds = aggnet::DemandSet::load(demands_path);
      const std::string map_text = read_file(map_path);
      const aggnet::MilpModel model =
          aggnet::build_model(topo, ds, aggnet::model_map_strict_flag(map_text));
      aggnet::verify_model_map(model, map_text);
      const aggnet::MilpSolution sol = aggnet::read_solution(model, read_file(sol_path));
      const auto violations = aggnet::validate_solution(model, sol);
      if (!violations.empty()) {
        std::cout << "verdict: INFEASIBLE (" << violations.size() << " violations)\n";
        size_t shown = 0;
        for (const auto& v : violations) {
          if (++shown > 20) break;
          std::cout << "  " << v.constraint << ": lhs " << v.lhs << " vs rhs " << v.rhs
                    << "\n";
        }
        return 3;
      }
      std::cout << "verdict: FEASIBLE, objective " << sol.objective_value << "\n";
      const aggnet::AggregationPlan plan = aggnet::decode_plan(model, sol);
      print_plan(topo, ds, plan, format, "");
    } else if (compare->parsed()) {
      const aggnet::DemandSet ds = aggnet::DemandSet::load(demands_path);
      const aggnet::SampleResult row =
          aggnet::compare_designs(topo, ds, scenario_of(ds), 0, 0);
      if (format == "json")
        std::cout << sample_json(row).dump(2) << "\n";
      else
        std::cout << aggnet::sample_csv_header() << "\n"
                  << aggnet::sample_csv_row(row) << "\n";
    } else if (experiment->parsed()) {
      const aggnet::ExperimentReport report =
          aggnet::run_experiment(topo, scenarios, samples, seed, fixed_sources);
      if (format == "json") {
        json doc;
        doc["rows"] = json::array();
        for (const auto& row : report.rows) doc["rows"].push_back(sample_json(row));
        doc["summaries"] = json::array();
        for (const auto& s : report.summaries)
          doc["summaries"].push_back(json{{"scenario", s.scenario},
                                          {"mean_gain", s.mean_gain},
                                          {"min_gain", s.min_gain},
                                          {"max_gain", s.max_gain}});
        write_file(out_path, doc.dump(2) + "\n");
      } else {
        write_file(out_path, aggnet::report_csv(report));
        const std::string long_path =
            (std::filesystem::path(out_path).parent_path() /
             (std::filesystem::path(out_path).stem().string() + ".long.csv"))
                .string();
        write_file(long_path, aggnet::report_long_csv(report));
      }
      for (const auto& s : report.summaries) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "scenario %d: mean gain %.4f, min %.4f, max %.4f", s.scenario,
                      s.mean_gain, s.min_gain, s.max_gain);
        std::cout << line << "\n";
      }
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
