#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "irs/graph.hpp"
#include "irs/params.hpp"
#include "irs/rational.hpp"

namespace irs {

// One uniform sample per vertex; bin i covers [(i-1)/delta, i/delta),
// the last bin is closed at 1.
struct BinAssignment {
  std::vector<double> x;
  std::vector<int> bin;  // 1..delta
};

BinAssignment assign_bins(long long n, const Parameters& p, std::uint64_t seed);
int bin_of(double x, long long delta);

// S = bins above delta - s_star, split into k_prime runs of consecutive
// bins; the remainder r = s_star mod k_prime goes to the last r runs.
struct PartitionState {
  std::vector<int> bin;            // per vertex
  std::vector<char> in_S;          // per vertex
  std::vector<int> subset;         // per vertex: 1..k_prime in S, 0 in B
  std::vector<int> subset_of_bin;  // index 1..delta -> 0 or subset id
  std::vector<long long> bins_in_subset;  // index 1..k_prime
  long long size_S = 0;
  long long size_B = 0;
};

PartitionState build_partition(const BinAssignment& bins, const Parameters& p);

// Initial weights:
//  - both ends in B, bins i + j > delta - s_star + 1: ceil(n/delta) + a'
//  - one end in B, other in subset j of S:            ceil(ceil(n/delta)/(3 k')) * (j + k')
//  - other B-B edges: 1;  S-S edges: 0.
std::vector<long long> assign_f1(const Graph& g, const PartitionState& part,
                                 const Parameters& p);

// Expected weighted degrees and their interval structure. All exact,
// denominator delta throughout.
struct ExpectedLayout {
  long long width = 0;  // W = ceil(n/delta) + a' - 1, interval length
  // sigma_num[v][i-1] = delta * E[weighted degree | v in bin i], i <= delta - s_star
  std::vector<std::vector<long long>> sigma_num;
  std::map<long long, long long> mu_count;  // interval h -> delta * mu_h
  std::vector<long long> benchmarks;        // ascending, first is 0
};

// E[weighted degree of v | v lands in bin i], exact.
Rat sigma_mu(const ExpectedLayout& lay, int v, long long i, long long delta);
// Index h of the length-W interval holding sigma_mu, or -1 when it is 0.
long long interval_of(const ExpectedLayout& lay, int v, long long i, long long delta);

ExpectedLayout compute_expected_layout(const Graph& g, const PartitionState& part,
                                       const Parameters& p);

struct BadSets {
  std::vector<char> y_b;    // B vertices far from expectation
  std::vector<char> y_s;    // vertices with too few S-neighbors
  std::vector<char> y_sn;   // protective B-neighbors of y_s members
  std::vector<char> y_sq;   // S vertices with skewed B-degree
  std::vector<char> u_b;    // union of the above
  std::vector<char> u_g;    // S minus u_b
};

BadSets detect_bad_sets(const Graph& g, const PartitionState& part,
                        const std::vector<long long>& f1, const ExpectedLayout& layout,
                        const Parameters& p);

struct ThresholdReport {
  struct Check {
    std::string name;
    double measured = 0;
    double bound = 0;
    bool pass = true;
  };
  std::vector<Check> checks;
  bool all_pass = true;
  bool anomaly_dense_bad = false;  // delta > sqrt(n) yet bad vertices exist
};

// close_sets: for each vertex in S, its list of close vertices (see
// step_c.hpp); pass empty lists to skip that check.
ThresholdReport check_random_event_thresholds(const Graph& g, const PartitionState& part,
                                              const std::vector<long long>& f1,
                                              const ExpectedLayout& layout, const BadSets& bad,
                                              const std::vector<std::vector<int>>& close_sets,
                                              const Parameters& p);

}  // namespace irs
