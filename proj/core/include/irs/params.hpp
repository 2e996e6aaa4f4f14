#pragma once
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace irs {

enum class ParamMode { paper, overridden };

struct Overrides {
  std::optional<long long> s_star, k_prime, k, a_prime, t_b, t_g;
};

struct Parameters {
  double epsilon = 0.2;   // in (0, 0.25)
  double alpha = 0.05;    // in (0, epsilon), 2*epsilon + alpha < 0.5
  long long n = 0;
  long long delta = 0;    // minimum degree
  long long s_star = 0;   // number of high bins forming S
  long long k_prime = 0;  // number of S-subsets
  long long k = 0;        // residue modulus
  long long a_prime = 0;  // heavy-weight surcharge
  long long t_b = 0;      // anchor period, constrained vertices
  long long t_g = 0;      // anchor period, unconstrained vertices
  ParamMode mode = ParamMode::paper;
  Overrides overrides;

  // Degenerate-scale diagnostics (never errors on their own).
  bool degenerate_k_prime = false;  // k_prime == 1
  bool degenerate_k = false;        // k <= 50, below the analyzed regime

  long long ceil_n_over_delta() const { return (n + delta - 1) / delta; }
};

// Derives every parameter from (n, delta, epsilon, alpha); any override
// replaces the derived value. Validates: 0 < alpha < epsilon < 0.25,
// 2*epsilon + alpha < 0.5, delta >= 1, s_star < delta, 1 <= k_prime <=
// s_star, k >= 1, t_b >= 1, and (2*t_b) | t_g.
Parameters derive_params(long long n, long long delta, double epsilon, double alpha,
                         const Overrides& ov = {});

nlohmann::json params_to_json(const Parameters& p);
Parameters params_from_json(const nlohmann::json& j);

}  // namespace irs
