#include "irs/step_b.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

namespace irs {

std::vector<std::pair<long long, long long>> shift_intervals(
    const std::vector<std::pair<long long, long long>>& iv) {
  std::vector<std::pair<long long, long long>> out;
  out.reserve(iv.size());
  long long prev_end = 0;
  bool first = true;
  for (auto [a, b] : iv) {
    if (b < a) throw Error("interval with negative length");
    long long a2 = first ? a : std::max(a, prev_end);
    out.emplace_back(a2, a2 + (b - a));
    prev_end = a2 + (b - a);
    first = false;
  }
  return out;
}

std::vector<long long> pack_within_interval(const ZPrimeCodec& codec, long long from,
                                            long long count) {
  std::vector<long long> out;
  out.reserve(count);
  long long r = codec.rank(codec.next_member(from));
  for (long long i = 0; i < count; ++i) out.push_back(codec.unrank(r + i));
  return out;
}

namespace {

// Split total into parts.size() summands differing by at most one,
// added onto parts in order.
void spread(long long total, long long count, const std::vector<int>& edges,
            std::vector<long long>& w) {
  long long q = total >= 0 ? total / count : -((-total + count - 1) / count);
  long long rem = total - q * count;  // 0 <= rem < count
  for (long long i = 0; i < (long long)edges.size(); ++i) w[edges[i]] += q + (i < rem ? 1 : 0);
}

}  // namespace

StepBResult run_step_b(const Graph& g, const PartitionState& part, const BadSets& bad,
                       const ExpectedLayout& layout, const std::vector<long long>& f1,
                       const Parameters& p) {
  StepBResult res;
  res.f = f1;
  res.targeted.assign(g.n(), 0);
  res.target.assign(g.n(), 0);

  std::vector<long long> wd(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    wd[u] += f1[e];
    wd[v] += f1[e];
  }
  std::vector<std::vector<int>> s_edges(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (const auto& a : g.neighbors(v))
      if (part.in_S[a.to] && !part.in_S[v]) s_edges[v].push_back(a.edge);

  double cap = 2.0 * (double)(p.ceil_n_over_delta() + p.a_prime) *
                   std::pow((double)p.delta, 0.5 + p.alpha) / (double)p.s_star +
               1.0;

  // Phase 1: move usable low-side vertices onto (the rounding of) their
  // expected weight, spending the difference on their S-edges.
  for (int v = 0; v < g.n(); ++v) {
    if (part.in_S[v] || bad.y_b[v] || bad.y_s[v]) continue;
    long long want = sigma_mu(layout, v, part.bin[v], p.delta).round();
    long long delta_v = want - wd[v];
    long long ds = (long long)s_edges[v].size();
    if (ds == 0) throw CapacityExceeded("usable vertex without S-edges");
    double per = std::ceil((double)std::llabs(delta_v) / (double)ds);
    if (per > cap)
      throw CapacityExceeded("per-edge correction " + std::to_string((long long)per) +
                             " exceeds cap");
    spread(delta_v, ds, s_edges[v], res.f);
    wd[v] = want;
    res.targeted[v] = 1;
  }

  // Phase 2: pack each expectation interval's vertices onto consecutive
  // Z' values, then push overlapping blocks right, globally.
  if (p.k < 7)
    throw CapacityExceeded("modulus k=" + std::to_string(p.k) +
                           " leaves the restricted value set empty");
  ZPrimeCodec codec{p.k};
  long long W = layout.width;
  std::map<long long, std::vector<int>> groups;  // interval h -> members
  for (int v = 0; v < g.n(); ++v)
    if (res.targeted[v]) groups[interval_of(layout, v, part.bin[v], p.delta)].push_back(v);

  std::vector<std::pair<long long, long long>> blocks;  // rank space
  std::vector<std::vector<int>*> members;
  for (auto& [h, vs] : groups) {
    std::sort(vs.begin(), vs.end(), [&](int a, int b) {
      return wd[a] < wd[b] || (wd[a] == wd[b] && a < b);
    });
    long long from = h == 0 ? 1 : h * W;
    long long start = codec.rank(codec.next_member(from));
    blocks.emplace_back(start, start + (long long)vs.size());
    members.push_back(&vs);
  }
  auto shifted = shift_intervals(blocks);

  for (size_t b = 0; b < shifted.size(); ++b) {
    res.max_shift_ranks = std::max(res.max_shift_ranks, shifted[b].first - blocks[b].first);
    for (size_t i = 0; i < members[b]->size(); ++i) {
      int v = (*members[b])[i];
      long long goal = codec.unrank(shifted[b].first + (long long)i);
      spread(goal - wd[v], (long long)s_edges[v].size(), s_edges[v], res.f);
      wd[v] = goal;
      res.target[v] = goal;
    }
  }

  // Only cross edges were touched; all must stay positive.
  for (int v = 0; v < g.n(); ++v)
    for (int e : s_edges[v])
      if (res.f[e] < 1)
        throw CapacityExceeded("cross edge driven to weight " + std::to_string(res.f[e]));
  return res;
}

}  // namespace irs
