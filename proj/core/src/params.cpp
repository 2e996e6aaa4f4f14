#include "irs/params.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "irs/errors.hpp"

namespace irs {

namespace {

long long ceil_real(double v) {
  // pow() results that should be integral can land a hair below; nudge up.
  return (long long)std::ceil(v + 1e-9);
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Parameters derive_params(long long n, long long delta, double epsilon, double alpha,
                         const Overrides& ov) {
  if (n < 1) throw InvalidParameters("n must be positive");
  if (delta < 1) throw InvalidParameters("minimum degree must be positive");
  if (!(epsilon > 0.0 && epsilon < 0.25))
    throw InvalidParameters("epsilon must lie in (0, 0.25)");
  if (!(alpha > 0.0 && alpha < epsilon))
    throw InvalidParameters("alpha must lie in (0, epsilon)");
  if (!(2 * epsilon + alpha < 0.5))
    throw InvalidParameters("2*epsilon + alpha must be < 0.5");

  Parameters p;
  p.epsilon = epsilon;
  p.alpha = alpha;
  p.n = n;
  p.delta = delta;
  p.overrides = ov;

  p.s_star = ov.s_star ? *ov.s_star : ceil_real(std::pow((double)delta, 0.5 + epsilon + alpha));
  p.k_prime = ov.k_prime
                  ? *ov.k_prime
                  : std::min(ceil_div(n, 400 * delta),
                             ceil_real(std::pow((double)delta, epsilon) / 2000.0));
  p.k = ov.k ? *ov.k : ceil_div(p.k_prime, 1000);
  p.a_prime = ov.a_prime ? *ov.a_prime : ceil_div(7 * n, delta * p.k);
  p.t_b = ov.t_b ? *ov.t_b
                 : ceil_real(48.0 * (double)n *
                             std::exp(-std::pow((double)delta, 2 * alpha) / 4.0) /
                             (double)p.s_star);
  if (ov.t_g) {
    p.t_g = *ov.t_g;
  } else {
    double per = 16.0 * (double)n / ((double)delta * (double)p.k_prime);
    p.t_g = 2 * ceil_real(per / (double)p.t_b) * p.t_b;
  }

  bool any_override = ov.s_star || ov.k_prime || ov.k || ov.a_prime || ov.t_b || ov.t_g;
  p.mode = any_override ? ParamMode::overridden : ParamMode::paper;

  if (p.s_star < 1 || p.s_star >= delta)
    throw InvalidParameters("s_star must satisfy 1 <= s_star < delta");
  if (p.k_prime < 1 || p.k_prime > p.s_star)
    throw InvalidParameters("k_prime must satisfy 1 <= k_prime <= s_star");
  if (p.k < 1) throw InvalidParameters("k must be >= 1");
  if (p.a_prime < 1) throw InvalidParameters("a_prime must be >= 1");
  if (p.t_b < 1) throw InvalidParameters("t_b must be >= 1");
  if (p.t_g < 1 || p.t_g % (2 * p.t_b) != 0)
    throw InvalidParameters("t_g must be a positive multiple of 2*t_b");

  p.degenerate_k_prime = (p.k_prime == 1);
  p.degenerate_k = (p.k <= 50);
  return p;
}

nlohmann::json params_to_json(const Parameters& p) {
  nlohmann::json ov = nlohmann::json::object();
  if (p.overrides.s_star) ov["s_star"] = *p.overrides.s_star;
  if (p.overrides.k_prime) ov["k_prime"] = *p.overrides.k_prime;
  if (p.overrides.k) ov["k"] = *p.overrides.k;
  if (p.overrides.a_prime) ov["a_prime"] = *p.overrides.a_prime;
  if (p.overrides.t_b) ov["t_b"] = *p.overrides.t_b;
  if (p.overrides.t_g) ov["t_g"] = *p.overrides.t_g;
  return nlohmann::json{{"epsilon", p.epsilon},
                        {"alpha", p.alpha},
                        {"n", p.n},
                        {"delta", p.delta},
                        {"s_star", p.s_star},
                        {"k_prime", p.k_prime},
                        {"k", p.k},
                        {"a_prime", p.a_prime},
                        {"t_b", p.t_b},
                        {"t_g", p.t_g},
                        {"mode", p.mode == ParamMode::paper ? "paper" : "overridden"},
                        {"overrides", ov},
                        {"degenerate_k_prime", p.degenerate_k_prime},
                        {"degenerate_k", p.degenerate_k}};
}

Parameters params_from_json(const nlohmann::json& j) {
  Overrides ov;
  if (j.contains("overrides")) {
    const auto& o = j.at("overrides");
    if (o.contains("s_star")) ov.s_star = o.at("s_star").get<long long>();
    if (o.contains("k_prime")) ov.k_prime = o.at("k_prime").get<long long>();
    if (o.contains("k")) ov.k = o.at("k").get<long long>();
    if (o.contains("a_prime")) ov.a_prime = o.at("a_prime").get<long long>();
    if (o.contains("t_b")) ov.t_b = o.at("t_b").get<long long>();
    if (o.contains("t_g")) ov.t_g = o.at("t_g").get<long long>();
  }
  return derive_params(j.at("n").get<long long>(), j.at("delta").get<long long>(),
                       j.at("epsilon").get<double>(), j.at("alpha").get<double>(), ov);
}

}  // namespace irs
