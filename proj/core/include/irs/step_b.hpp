#pragma once
#include <utility>
#include <vector>

#include "irs/step_a.hpp"

namespace irs {

// The value set Z' = { x : x mod k not in {0..5} } with a rank/unrank
// bijection between its non-negative part and 0,1,2,...
struct ZPrimeCodec {
  long long k;  // must be >= 7

  bool member(long long x) const {
    long long r = x % k;
    if (r < 0) r += k;
    return r >= 6;
  }
  // number of members in [0, x); requires x >= 0
  long long rank(long long x) const {
    long long q = x / k, r = x % k;
    return q * (k - 6) + std::max(0LL, r - 6);
  }
  long long unrank(long long r) const {
    long long q = r / (k - 6), rem = r % (k - 6);
    return q * k + 6 + rem;
  }
  // smallest member >= x (x >= 0)
  long long next_member(long long x) const {
    long long r = x % k;
    if (r >= 6) return x;
    return x - r + 6;
  }
};

// Push-right disjointification: intervals [a_i, b_i), already sorted by
// a_i, become [a_i', a_i' + len_i) with a_i' = max(a_i, previous end).
std::vector<std::pair<long long, long long>> shift_intervals(
    const std::vector<std::pair<long long, long long>>& iv);

// count consecutive members of Z' starting at the first member >= from
std::vector<long long> pack_within_interval(const ZPrimeCodec& codec, long long from,
                                            long long count);

struct StepBResult {
  std::vector<long long> f;        // weights after the adjustment
  std::vector<char> targeted;      // vertices pinned to a Z' value
  std::vector<long long> target;   // the pinned value (0 when not targeted)
  long long max_shift_ranks = 0;   // largest block displacement applied
};

// Moves every usable low-side vertex to its expectation and then to a
// private Z' value; only weights of edges into S change.
StepBResult run_step_b(const Graph& g, const PartitionState& part, const BadSets& bad,
                       const ExpectedLayout& layout, const std::vector<long long>& f1,
                       const Parameters& p);

}  // namespace irs
