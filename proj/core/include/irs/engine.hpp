#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "irs/oracle.hpp"
#include "irs/params.hpp"
#include "irs/step_a.hpp"
#include "irs/step_c.hpp"
#include "irs/weighting.hpp"

namespace irs {

struct SolveConfig {
  std::uint64_t seed = 1;
  double epsilon = 0.2;
  double alpha = 0.05;
  std::optional<Overrides> overrides;  // explicit parameter overrides
  bool auto_overrides = false;         // pick workable overrides from (n, delta)
  int max_retries = 20;
  bool allow_fallback = true;
  bool collect_state = false;  // keep partition/goal details in the report
};

struct SolveReport {
  long long k_achieved = 0;
  bool valid = false;
  bool lower_bound_finite = true;
  long long lower_bound = 1;
  long long kkp_benchmark = 0;             // 6 * ceil(n/delta)
  std::optional<long long> paper_target;   // ceil(n/delta) + ceil(7n/(delta k))
  std::string method;                      // pipeline | fallback | exact
  int retries_used = 0;
  bool capacity_retries = false;  // some attempt died on a capacity error
  std::uint64_t seed = 0;
  ThresholdReport threshold_report;        // from the successful attempt
  GoalReport goal_report;
  Parameters params;
  bool params_valid = false;
  EdgeWeighting weighting;
  double total_ms = 0, pipeline_ms = 0, fallback_ms = 0;
};

// Parameter overrides that make the pipeline workable at bench scale
// (small n, small delta) instead of the asymptotic defaults.
Overrides desk_overrides(long long n, long long delta);

SolveReport solve(const Graph& g, const SolveConfig& cfg);

// Randomized doubling baseline: random weights in [1,k], local repair,
// k doubles on failure. Gives up (throws) past k > n^3.
EdgeWeighting baseline_solve(const Graph& g, std::uint64_t seed, long long start_k = 0);

// include_timings=false yields byte-stable output for a fixed seed
nlohmann::json report_to_json(const SolveReport& rep, bool include_timings = true);
nlohmann::json threshold_report_to_json(const ThresholdReport& rep);

// Instances described by a JSON spec; one CSV row per (instance, seed).
// Columns: n,delta,m,method,k_achieved,lower_bound,kkp_benchmark,ratio,
// retries,ms,seed,valid
void run_experiment(const nlohmann::json& spec, std::ostream& csv);

}  // namespace irs
