#include "irs/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "irs/step_b.hpp"

namespace irs {

namespace {
double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }
}  // namespace

Overrides desk_overrides(long long n, long long delta) {
  Overrides ov;
  long long s = std::min(delta - 1, (9 * delta + 9) / 10);
  s = std::max<long long>(1, s);
  ov.s_star = s;
  // one S-subset: keeps every close-set below its 2*ceil(s*/k')*n/delta cap
  ov.k_prime = 1;
  long long k = std::max<long long>(7, (72 * s / 100 - 14) / 2);
  ov.k = k;
  long long q = ceil_div(n, delta);
  ov.a_prime = std::max<long long>(1, ceil_div(9 * q, k - 6));
  long long tb = 32;
  ov.t_b = tb;
  ov.t_g = 2 * tb * std::max<long long>(1, ceil_div(ceil_div(10 * n, s), 2 * tb));
  return ov;
}

SolveReport solve(const Graph& g, const SolveConfig& cfg) {
  auto t_start = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.seed = cfg.seed;

  auto lb = lower_bound(g);
  rep.lower_bound_finite = lb.finite;
  rep.lower_bound = lb.value;
  if (!lb.finite)
    throw Error("graph has no irregular weighting: isolated edge or repeated isolated vertex");

  auto st = degree_stats(g);
  long long delta = st.min_degree;
  rep.kkp_benchmark = delta >= 1 ? 6 * ceil_div(g.n(), delta) : 0;

  bool try_pipeline = delta >= 4 && g.n() > delta;
  Parameters params{};
  if (try_pipeline) {
    try {
      Overrides ov;
      if (cfg.overrides) ov = *cfg.overrides;
      else if (cfg.auto_overrides) ov = desk_overrides(g.n(), delta);
      params = derive_params(g.n(), delta, cfg.epsilon, cfg.alpha, ov);
      rep.params = params;
      rep.params_valid = true;
      if (params.k < 7) try_pipeline = false;  // restricted value set is empty
      if (params.mode == ParamMode::paper)
        rep.paper_target = params.ceil_n_over_delta() + ceil_div(7 * params.n, delta * params.k);
    } catch (const InvalidParameters&) {
      try_pipeline = false;
    }
  }

  auto t_pipe = std::chrono::steady_clock::now();
  if (try_pipeline) {
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
      rep.retries_used = attempt;
      std::uint64_t seed = cfg.seed + (std::uint64_t)attempt;
      try {
        auto bins = assign_bins(g.n(), params, seed);
        auto part = build_partition(bins, params);
        auto f1 = assign_f1(g, part, params);
        auto layout = compute_expected_layout(g, part, params);
        auto bad = detect_bad_sets(g, part, f1, layout, params);
        auto close_sets = compute_close_sets(g, part, params);
        auto thresholds =
            check_random_event_thresholds(g, part, f1, layout, bad, close_sets, params);
        if (!thresholds.all_pass) {
          rep.threshold_report = thresholds;
          continue;
        }
        auto sb = run_step_b(g, part, bad, layout, f1, params);
        auto f = sb.f;
        auto goals = run_step_c(g, part, bad, close_sets, f, params);
        if (!goals.all()) {
          rep.goal_report = goals;
          continue;
        }
        long long kmax = 1;
        for (long long w : f) kmax = std::max(kmax, w);
        EdgeWeighting cand{kmax, f};
        auto check = verify_irregular(g, cand);
        if (!check.valid) continue;  // residual cross-group collision
        rep.k_achieved = kmax;
        rep.valid = true;
        rep.method = "pipeline";
        rep.threshold_report = thresholds;
        rep.goal_report = goals;
        rep.weighting = std::move(cand);
        rep.pipeline_ms = ms_since(t_pipe);
        rep.total_ms = ms_since(t_start);
        return rep;
      } catch (const CapacityExceeded&) {
        rep.capacity_retries = true;
      } catch (const RecoverableError&) {
      }
    }
  }
  rep.pipeline_ms = ms_since(t_pipe);

  if (!cfg.allow_fallback) throw GreedyInfeasible("pipeline failed and fallback disabled");
  auto t_fb = std::chrono::steady_clock::now();
  rep.weighting = baseline_solve(g, cfg.seed, std::max(rep.lower_bound, 1LL));
  rep.k_achieved = rep.weighting.k;
  rep.valid = verify_irregular(g, rep.weighting).valid;
  rep.method = "fallback";
  rep.fallback_ms = ms_since(t_fb);
  rep.total_ms = ms_since(t_start);
  return rep;
}

EdgeWeighting baseline_solve(const Graph& g, std::uint64_t seed, long long start_k) {
  if (g.m() == 0) {
    if (g.n() > 1) throw Error("no edges: strength undefined beyond one vertex");
    return {1, {}};
  }
  std::mt19937_64 rng(seed);
  long long n3 = (long long)g.n() * g.n() * g.n();
  for (long long k = std::max(1LL, start_k);; k *= 2) {
    if (k > std::max(n3, 8LL)) throw Error("baseline exceeded k = n^3 without success");
    std::uniform_int_distribution<long long> pickw(1, k);
    EdgeWeighting f{k, std::vector<long long>(g.m())};
    for (auto& w : f.w) w = pickw(rng);
    auto wd = weighted_degrees(g, f);
    std::unordered_map<long long, long long> cnt;  // degree value -> multiplicity
    long long coll = 0;                            // number of colliding pairs
    for (long long d : wd) coll += cnt[d]++;
    auto retune = [&](int v, long long nd) {  // move v's degree, return pair delta
      long long delta = -(cnt[wd[v]] - 1);
      if (--cnt[wd[v]] == 0) cnt.erase(wd[v]);
      wd[v] = nd;
      delta += cnt[nd]++;
      return delta;
    };
    long long rounds = 400LL * g.n();
    std::uniform_int_distribution<int> picke(0, g.m() - 1);
    while (coll > 0 && rounds-- > 0) {
      int e = picke(rng);
      long long old = f.w[e];
      long long neww = pickw(rng);
      if (neww == old) continue;
      auto [u, v] = g.edges()[e];
      long long delta = retune(u, wd[u] + neww - old) + retune(v, wd[v] + neww - old);
      if (delta > 0) {  // reject worsening moves
        delta += retune(u, wd[u] - (neww - old)) + retune(v, wd[v] - (neww - old));
        coll += delta;
      } else {
        f.w[e] = neww;
        coll += delta;
      }
    }
    if (coll == 0 && verify_irregular(g, f).valid) return f;
  }
}

nlohmann::json threshold_report_to_json(const ThresholdReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"measured", c.measured}, {"bound", c.bound},
                      {"pass", c.pass}});
  return {{"checks", checks}, {"all_pass", rep.all_pass},
          {"anomaly_dense_bad", rep.anomaly_dense_bad}};
}

nlohmann::json report_to_json(const SolveReport& rep, bool include_timings) {
  nlohmann::json j{
      {"k_achieved", rep.k_achieved},
      {"valid", rep.valid},
      {"lower_bound", rep.lower_bound_finite ? nlohmann::json(rep.lower_bound)
                                             : nlohmann::json("infinity")},
      {"kkp_benchmark", rep.kkp_benchmark},
      {"method", rep.method},
      {"retries_used", rep.retries_used},
      {"capacity_retries", rep.capacity_retries},
      {"seed", rep.seed},
      {"threshold_report", threshold_report_to_json(rep.threshold_report)},
  };
  if (rep.paper_target) j["paper_target"] = *rep.paper_target;
  if (rep.params_valid) j["params"] = params_to_json(rep.params);
  if (rep.method == "pipeline") {
    j["goals"] = {{"residues_ok", rep.goal_report.residues_ok},
                  {"uprime_ok", rep.goal_report.uprime_ok},
                  {"bad_ok", rep.goal_report.bad_ok},
                  {"good_ok", rep.goal_report.good_ok}};
  }
  if (include_timings)
    j["timings"] = {{"total_ms", rep.total_ms},
                    {"pipeline_ms", rep.pipeline_ms},
                    {"fallback_ms", rep.fallback_ms}};
  return j;
}

void run_experiment(const nlohmann::json& spec, std::ostream& csv) {
  csv << "n,delta,m,method,k_achieved,lower_bound,kkp_benchmark,ratio,retries,ms,seed,valid\n";
  SolveConfig base;
  if (spec.contains("config")) {
    const auto& c = spec.at("config");
    if (c.contains("epsilon")) base.epsilon = c.at("epsilon").get<double>();
    if (c.contains("alpha")) base.alpha = c.at("alpha").get<double>();
    if (c.contains("max_retries")) base.max_retries = c.at("max_retries").get<int>();
    if (c.contains("auto_overrides")) base.auto_overrides = c.at("auto_overrides").get<bool>();
  }
  for (const auto& inst : spec.at("instances")) {
    std::string family = inst.at("family").get<std::string>();
    int n = inst.at("n").get<int>();
    int d = (inst.contains("delta") ? inst.at("delta") : inst.at("d")).get<int>();
    std::vector<std::uint64_t> seeds;
    for (const auto& s : inst.at("seeds")) seeds.push_back(s.get<std::uint64_t>());
    for (auto s : seeds) {
      Graph g = family == "regular"
                    ? generate_random_regular(n, d, s)
                    : generate_min_degree_graph(
                          n, d, inst.value("density", 2.0 * d / (double)n), s);
      SolveConfig cfg = base;
      cfg.seed = s;
      auto rep = solve(g, cfg);
      auto st = degree_stats(g);
      double ratio = rep.kkp_benchmark > 0
                         ? (double)rep.k_achieved / (double)rep.kkp_benchmark
                         : 0.0;
      csv << g.n() << ',' << st.min_degree << ',' << g.m() << ',' << rep.method << ','
          << rep.k_achieved << ',' << rep.lower_bound << ',' << rep.kkp_benchmark << ','
          << ratio << ',' << rep.retries_used << ',' << rep.total_ms << ',' << s << ','
          << (rep.valid ? "true" : "false") << '\n';
    }
  }
}

}  // namespace irs
