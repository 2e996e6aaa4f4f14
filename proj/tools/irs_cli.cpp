// Command line front end: graph generation, solving, exact search,
// verification, parameter inspection, batch experiments.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "irs/engine.hpp"
#include "irs/oracle.hpp"

using nlohmann::json;

namespace {

irs::Graph read_graph(const std::string& path) {
  if (path == "-") return irs::load_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw irs::Error("cannot open " + path);
  return irs::load_edge_list(in);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw irs::Error("cannot open " + path + " for writing");
  return file;
}

irs::Overrides overrides_from_json(const json& o) {
  irs::Overrides ov;
  if (o.contains("s_star")) ov.s_star = o.at("s_star").get<long long>();
  if (o.contains("k_prime")) ov.k_prime = o.at("k_prime").get<long long>();
  if (o.contains("k")) ov.k = o.at("k").get<long long>();
  if (o.contains("a_prime")) ov.a_prime = o.at("a_prime").get<long long>();
  if (o.contains("t_b")) ov.t_b = o.at("t_b").get<long long>();
  if (o.contains("t_g")) ov.t_g = o.at("t_g").get<long long>();
  return ov;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irregular edge weight construction"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a random graph");
  std::string gen_family = "regular", gen_output;
  int gen_n = 100, gen_d = 10;
  double gen_density = -1.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", gen_family, "regular | min-degree")
      ->check(CLI::IsMember({"regular", "min-degree"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "degree / minimum degree")->required();
  gen->add_option("--density", gen_density, "edge density (min-degree family)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--output", gen_output, "output file ('-' = stdout)");

  // solve
  auto* slv = app.add_subcommand("solve", "run the constructive pipeline");
  std::string slv_input, slv_output, slv_mode = "paper", slv_override_json, slv_dump_state;
  std::string slv_weights_out;
  std::uint64_t slv_seed = 1;
  double slv_eps = 0.2, slv_alpha = 0.05;
  int slv_retries = 20;
  slv->add_option("--input", slv_input, "edge list file ('-' = stdin)")->required();
  slv->add_option("--seed", slv_seed, "random seed");
  slv->add_option("--epsilon", slv_eps, "tail exponent, in (0, 0.25)");
  slv->add_option("--alpha", slv_alpha, "deviation exponent, in (0, epsilon)");
  slv->add_option("--mode", slv_mode, "paper | override")
      ->check(CLI::IsMember({"paper", "override"}));
  slv->add_option("--override-json", slv_override_json,
                  "JSON file with explicit parameter overrides (override mode); "
                  "omit to let the solver pick bench-scale values");
  slv->add_option("--max-retries", slv_retries, "pipeline re-randomization budget");
  slv->add_option("--dump-state", slv_dump_state, "write solver state JSON here");
  slv->add_option("--output", slv_output, "report output ('-' = stdout)");
  slv->add_option("--weights", slv_weights_out, "also write the weighting here");

  // exact
  auto* exa = app.add_subcommand("exact", "exact strength by complete search");
  std::string exa_input, exa_output;
  long long exa_budget = 200'000'000;
  exa->add_option("--input", exa_input)->required();
  exa->add_option("--budget", exa_budget, "search node budget");
  exa->add_option("--output", exa_output, "report output ('-' = stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a weighting file");
  std::string ver_input, ver_weights;
  ver->add_option("--input", ver_input, "edge list file")->required();
  ver->add_option("--weights", ver_weights, "weighting file")->required();

  // params
  auto* par = app.add_subcommand("params", "derive pipeline parameters");
  long long par_n = 0, par_delta = 0;
  double par_eps = 0.2, par_alpha = 0.05;
  std::string par_mode = "paper", par_override_json, par_output;
  par->add_option("--n", par_n)->required();
  par->add_option("--delta", par_delta)->required();
  par->add_option("--epsilon", par_eps);
  par->add_option("--alpha", par_alpha);
  par->add_option("--mode", par_mode)->check(CLI::IsMember({"paper", "override"}));
  par->add_option("--override-json", par_override_json);
  par->add_option("--output", par_output);

  // experiment
  auto* exp = app.add_subcommand("experiment", "batch runs from a JSON spec");
  std::string exp_input, exp_output, exp_format = "csv";
  exp->add_option("--input", exp_input, "experiment spec JSON")->required();
  exp->add_option("--output", exp_output);
  exp->add_option("--format", exp_format)->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    if (gen->parsed()) {
      double density = gen_density >= 0 ? gen_density : 2.0 * gen_d / (double)gen_n;
      irs::Graph g = gen_family == "regular"
                         ? irs::generate_random_regular(gen_n, gen_d, gen_seed)
                         : irs::generate_min_degree_graph(gen_n, gen_d, density, gen_seed);
      irs::write_edge_list(g, open_output(gen_output, file));
    } else if (slv->parsed()) {
      auto g = read_graph(slv_input);
      irs::SolveConfig cfg;
      cfg.seed = slv_seed;
      cfg.epsilon = slv_eps;
      cfg.alpha = slv_alpha;
      cfg.max_retries = slv_retries;
      if (slv_mode == "override") {
        if (!slv_override_json.empty()) {
          std::ifstream oj(slv_override_json);
          if (!oj) throw irs::Error("cannot open " + slv_override_json);
          cfg.overrides = overrides_from_json(json::parse(oj));
        } else {
          cfg.auto_overrides = true;
        }
      }
      cfg.collect_state = !slv_dump_state.empty();
      auto rep = irs::solve(g, cfg);
      open_output(slv_output, file) << irs::report_to_json(rep).dump(2) << '\n';
      if (!slv_weights_out.empty()) {
        std::ofstream wf(slv_weights_out);
        irs::write_weighting(g, rep.weighting, wf);
      }
      if (!slv_dump_state.empty()) {
        std::ofstream sf(slv_dump_state);
        json state{{"params", rep.params_valid ? irs::params_to_json(rep.params) : json()},
                   {"threshold_report", irs::threshold_report_to_json(rep.threshold_report)},
                   {"goals", {{"residues_ok", rep.goal_report.residues_ok},
                              {"uprime_ok", rep.goal_report.uprime_ok},
                              {"bad_ok", rep.goal_report.bad_ok},
                              {"good_ok", rep.goal_report.good_ok},
                              {"detail", rep.goal_report.detail}}}};
        sf << state.dump(2) << '\n';
      }
      return rep.valid ? 0 : 1;
    } else if (exa->parsed()) {
      auto g = read_graph(exa_input);
      auto res = irs::exact_strength(g, {exa_budget});
      json j;
      if (res.kind == irs::StrengthResult::Kind::value) {
        j = {{"k_achieved", res.k}, {"valid", true}, {"method", "exact"},
             {"lower_bound", irs::lower_bound(g).value}};
      } else if (res.kind == irs::StrengthResult::Kind::infinite) {
        j = {{"k_achieved", nullptr}, {"valid", false}, {"method", "exact"},
             {"lower_bound", "infinity"}};
      } else {
        j = {{"k_achieved", nullptr}, {"valid", false}, {"method", "exact"},
             {"error", "search budget exhausted"}};
      }
      open_output(exa_output, file) << j.dump(2) << '\n';
    } else if (ver->parsed()) {
      auto g = read_graph(ver_input);
      std::ifstream wf(ver_weights);
      if (!wf) throw irs::Error("cannot open " + ver_weights);
      auto f = irs::read_weighting(g, wf);
      auto res = irs::verify_irregular(g, f);
      std::cout << (res.valid ? "valid" : "invalid: " + res.detail) << '\n';
      return res.valid ? 0 : 1;
    } else if (par->parsed()) {
      irs::Overrides ov;
      if (par_mode == "override") {
        if (!par_override_json.empty()) {
          std::ifstream oj(par_override_json);
          if (!oj) throw irs::Error("cannot open " + par_override_json);
          ov = overrides_from_json(json::parse(oj));
        } else {
          ov = irs::desk_overrides(par_n, par_delta);
        }
      }
      auto p = irs::derive_params(par_n, par_delta, par_eps, par_alpha, ov);
      open_output(par_output, file) << irs::params_to_json(p).dump(2) << '\n';
    } else if (exp->parsed()) {
      std::ifstream in(exp_input);
      if (!in) throw irs::Error("cannot open " + exp_input);
      auto spec = json::parse(in);
      if (exp_format == "csv") {
        irs::run_experiment(spec, open_output(exp_output, file));
      } else {
        std::ostringstream csv;
        irs::run_experiment(spec, csv);
        // reshape the CSV into a JSON array of row objects
        std::istringstream rows(csv.str());
        std::string header, line;
        std::getline(rows, header);
        std::vector<std::string> cols;
        {
          std::istringstream hs(header);
          std::string c;
          while (std::getline(hs, c, ',')) cols.push_back(c);
        }
        json arr = json::array();
        while (std::getline(rows, line)) {
          std::istringstream ls(line);
          std::string cell;
          json row;
          for (size_t i = 0; std::getline(ls, cell, ','); ++i) row[cols[i]] = cell;
          arr.push_back(row);
        }
        open_output(exp_output, file) << arr.dump(2) << '\n';
      }
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
