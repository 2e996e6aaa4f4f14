#include "irs/step_a.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>

namespace irs {

int bin_of(double x, long long delta) {
  long long i = (long long)(x * (double)delta) + 1;
  if (i > delta) i = delta;  // closes the last bin at 1
  if (i < 1) i = 1;
  return (int)i;
}

BinAssignment assign_bins(long long n, const Parameters& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BinAssignment b;
  b.x.resize(n);
  b.bin.resize(n);
  for (long long v = 0; v < n; ++v) {
    b.x[v] = u(rng);
    b.bin[v] = bin_of(b.x[v], p.delta);
  }
  return b;
}

PartitionState build_partition(const BinAssignment& bins, const Parameters& p) {
  PartitionState ps;
  ps.bin = bins.bin;
  long long low = p.delta - p.s_star;  // bins > low form S
  ps.subset_of_bin.assign(p.delta + 1, 0);
  ps.bins_in_subset.assign(p.k_prime + 1, 0);
  long long base = p.s_star / p.k_prime;
  long long r = p.s_star % p.k_prime;
  long long next_bin = low + 1;
  for (long long j = 1; j <= p.k_prime; ++j) {
    long long sz = base + (j > p.k_prime - r ? 1 : 0);
    ps.bins_in_subset[j] = sz;
    for (long long t = 0; t < sz; ++t) ps.subset_of_bin[next_bin++] = (int)j;
  }
  assert(next_bin == p.delta + 1);
  ps.in_S.assign(bins.bin.size(), 0);
  ps.subset.assign(bins.bin.size(), 0);
  for (size_t v = 0; v < bins.bin.size(); ++v) {
    if (bins.bin[v] > low) {
      ps.in_S[v] = 1;
      ps.subset[v] = ps.subset_of_bin[bins.bin[v]];
      ++ps.size_S;
    } else {
      ++ps.size_B;
    }
  }
  return ps;
}

namespace {
long long cross_unit(const Parameters& p) {
  long long q = p.ceil_n_over_delta();
  return (q + 3 * p.k_prime - 1) / (3 * p.k_prime);
}
}  // namespace

std::vector<long long> assign_f1(const Graph& g, const PartitionState& part,
                                 const Parameters& p) {
  std::vector<long long> w(g.m(), 0);
  long long low = p.delta - p.s_star;
  long long heavy = p.ceil_n_over_delta() + p.a_prime;
  long long c = cross_unit(p);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    bool us = part.in_S[u], vs = part.in_S[v];
    if (us && vs) {
      w[e] = 0;
    } else if (!us && !vs) {
      long long i = part.bin[u], j = part.bin[v];
      // The trigger "other end in bins (low - i + 1, low]" is symmetric
      // in i and j; check both directions anyway.
      bool from_u = j > low - i + 1;
      bool from_v = i > low - j + 1;
      assert(from_u == from_v);
      w[e] = from_u ? heavy : 1;
    } else {
      int j = part.subset[us ? u : v];
      w[e] = c * (j + p.k_prime);
    }
  }
  return w;
}

ExpectedLayout compute_expected_layout(const Graph& g, const PartitionState& part,
                                       const Parameters& p) {
  ExpectedLayout lay;
  lay.width = p.ceil_n_over_delta() + p.a_prime - 1;
  long long low = p.delta - p.s_star;
  long long c = cross_unit(p);
  long long cross_sum = 0;  // sum over subsets of |bins| * c * (j + k')
  for (long long j = 1; j <= p.k_prime; ++j)
    cross_sum += part.bins_in_subset[j] * c * (j + p.k_prime);

  lay.sigma_num.assign(g.n(), {});
  for (int v = 0; v < g.n(); ++v) {
    long long deg = g.degree(v);
    lay.sigma_num[v].resize(low);
    for (long long i = 1; i <= low; ++i)
      lay.sigma_num[v][i - 1] = deg * ((i - 1) * lay.width + low + cross_sum);
  }
  for (int v = 0; v < g.n(); ++v)
    for (long long i = 1; i <= low; ++i) {
      long long h = interval_of(lay, v, i, p.delta);
      if (h >= 0) ++lay.mu_count[h];
    }
  // Benchmarks: close a group as soon as its mass exceeds n/(2*delta);
  // a light tail merges into the preceding group.
  lay.benchmarks.push_back(0);
  long long cum = 0;
  bool closed_any = false;
  for (auto [h, cnt] : lay.mu_count) {
    cum += cnt;
    if (2 * cum > p.n) {
      lay.benchmarks.push_back(h + 1);
      cum = 0;
      closed_any = true;
    }
  }
  if (cum > 0 && closed_any) lay.benchmarks.pop_back();
  return lay;
}

Rat sigma_mu(const ExpectedLayout& lay, int v, long long i, long long delta) {
  return Rat(lay.sigma_num[v][i - 1], delta);
}

long long interval_of(const ExpectedLayout& lay, int v, long long i, long long delta) {
  long long num = lay.sigma_num[v][i - 1];
  if (num == 0) return -1;
  return num / (delta * lay.width);
}

BadSets detect_bad_sets(const Graph& g, const PartitionState& part,
                        const std::vector<long long>& f1, const ExpectedLayout& layout,
                        const Parameters& p) {
  BadSets bad;
  int n = g.n();
  bad.y_b.assign(n, 0);
  bad.y_s.assign(n, 0);
  bad.y_sn.assign(n, 0);
  bad.y_sq.assign(n, 0);
  bad.u_b.assign(n, 0);
  bad.u_g.assign(n, 0);

  std::vector<long long> wd(n, 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    wd[u] += f1[e];
    wd[v] += f1[e];
  }
  std::vector<long long> deg_S(n, 0), deg_B(n, 0);
  for (int v = 0; v < n; ++v)
    for (const auto& a : g.neighbors(v)) (part.in_S[a.to] ? deg_S[v] : deg_B[v])++;

  for (int v = 0; v < n; ++v) {
    long long deg = g.degree(v);
    if (!part.in_S[v]) {
      long long diff_num = wd[v] * p.delta - layout.sigma_num[v][part.bin[v] - 1];
      long double dev = std::pow((long double)deg, 0.5L + (long double)p.alpha) *
                        (long double)layout.width;
      if ((long double)std::llabs(diff_num) > dev * (long double)p.delta) bad.y_b[v] = 1;
    }
    if (2 * p.delta * deg_S[v] < p.s_star * deg) bad.y_s[v] = 1;
    if (part.in_S[v]) {
      long long skew = p.delta * deg_B[v] - deg * (p.delta - p.s_star);
      long double lim = std::pow((long double)deg, 0.5L + (long double)p.epsilon) *
                        (long double)p.delta;
      if ((long double)std::llabs(skew) > lim) bad.y_sq[v] = 1;
    }
  }
  long long need = (p.s_star + 1) / 2;  // ceil(s_star / 2)
  for (int v = 0; v < n; ++v) {
    if (!bad.y_s[v]) continue;
    long long got = 0;
    for (const auto& a : g.neighbors(v)) {  // sorted by index
      if (part.in_S[a.to]) continue;
      bad.y_sn[a.to] = 1;
      if (++got == need) break;
    }
    if (got < need)
      throw PartitionDegenerate("vertex " + std::to_string(v) + " has only " +
                                std::to_string(got) + " low-side neighbors, needs " +
                                std::to_string(need));
  }
  for (int v = 0; v < n; ++v) {
    bad.u_b[v] = bad.y_b[v] | bad.y_s[v] | bad.y_sn[v] | bad.y_sq[v];
    bad.u_g[v] = part.in_S[v] && !bad.u_b[v];
  }
  return bad;
}

ThresholdReport check_random_event_thresholds(const Graph& g, const PartitionState& part,
                                              const std::vector<long long>& f1,
                                              const ExpectedLayout& layout, const BadSets& bad,
                                              const std::vector<std::vector<int>>& close_sets,
                                              const Parameters& p) {
  ThresholdReport rep;
  auto add = [&](const std::string& name, double measured, double bound, bool pass) {
    rep.checks.push_back({name, measured, bound, pass});
    rep.all_pass = rep.all_pass && pass;
  };
  double n = (double)p.n, delta = (double)p.delta;

  long long ub_count = 0;
  for (char c : bad.u_b) ub_count += c;
  double ub_bound = 3.0 * n * std::exp(-std::pow(delta, 2.0 * p.alpha) / 4.0);
  add("bad_set_size", (double)ub_count, ub_bound, (double)ub_count < ub_bound);

  double s_mid = (double)p.s_star * n / delta;
  double s_dev = n / std::pow(delta, 0.5 - p.epsilon);
  add("high_part_size", (double)part.size_S, s_dev,
      (double)part.size_S >= s_mid - s_dev && (double)part.size_S <= s_mid + s_dev);

  // Concentration of realized interval counts over every benchmark range.
  {
    const auto& bm = layout.benchmarks;
    size_t groups = bm.size();
    std::vector<long long> realized(groups, 0), mass(groups, 0);
    auto group_of = [&](long long h) {
      size_t lo = 0, hi = groups;  // last group with start <= h
      while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (bm[mid] <= h) lo = mid; else hi = mid;
      }
      return lo;
    };
    for (auto [h, cnt] : layout.mu_count) mass[group_of(h)] += cnt;
    for (int v = 0; v < g.n(); ++v) {
      if (part.in_S[v] || bad.y_b[v]) continue;
      long long h = interval_of(layout, v, part.bin[v], p.delta);
      if (h >= 0) ++realized[group_of(h)];
    }
    std::vector<long long> rpre(groups + 1, 0), mpre(groups + 1, 0);
    for (size_t i = 0; i < groups; ++i) {
      rpre[i + 1] = rpre[i] + realized[i];
      mpre[i + 1] = mpre[i] + mass[i];
    }
    double worst = 0.0;
    bool pass = true;
    for (size_t i = 0; i < groups; ++i)
      for (size_t j = i + 1; j <= groups; ++j) {
        double mu = (double)(mpre[j] - mpre[i]) / delta;
        double v_cnt = (double)(rpre[j] - rpre[i]);
        double bound = mu + std::sqrt(n * mu / std::pow(delta, 1.0 - 2.0 * p.alpha));
        if (v_cnt > bound) pass = false;
        if (bound > 0) worst = std::max(worst, v_cnt / bound);
      }
    add("interval_concentration", worst, 1.0, pass);
  }

  if (!close_sets.empty()) {
    double lim = 2.0 * std::ceil((double)p.s_star / (double)p.k_prime) * n / delta;
    long long worst = 0;
    for (int v = 0; v < g.n(); ++v)
      if (part.in_S[v] && v < (int)close_sets.size())
        worst = std::max(worst, (long long)close_sets[v].size());
    add("close_set_size", (double)worst, lim, (double)worst <= lim);
  }

  long long ub_total = ub_count;
  rep.anomaly_dense_bad = delta > std::sqrt(n) && ub_total > 0;
  (void)f1;
  return rep;
}

}  // namespace irs
