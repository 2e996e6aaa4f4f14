#pragma once
#include <string>
#include <utility>
#include <vector>

#include "irs/step_a.hpp"

namespace irs {

// Repair subgraph: the high part S, everything bad, the edges inside S,
// the bad-to-S edges, and the protective edges between y_s and y_sn.
struct GPrime {
  std::vector<char> in_gp;      // per vertex of the host graph
  std::vector<char> in_S;       // copied from the partition
  std::vector<char> is_Wiso;    // isolated in G'[S]
  std::vector<char> in_Uprime;  // V(G') \ (S \ Wiso)
  std::vector<char> good;       // usable S vertices (u_g)
  std::vector<int> vertices;    // ascending
  std::vector<std::vector<Graph::Adj>> adj;  // indexed by host vertex
  long long min_degree = 0;
};

GPrime build_gprime(const Graph& g, const PartitionState& part, const BadSets& bad,
                    const Parameters& p);

// Resets weights of G'[S] and G'[B] edges to ceil(ceil(n/delta)/2);
// cross edges keep their current value.
void init_weights_c(const Graph& g, const GPrime& gp, std::vector<long long>& f,
                    const Parameters& p);

// Processing order: vertices isolated inside G'[U'], then each component
// of G'[U'] in reversed BFS order (root last), then each non-trivial
// component of G'[S] likewise. The last two vertices of every component
// form a terminal pair (r, t).
struct VertexOrdering {
  std::vector<int> order;
  std::vector<int> pos;  // host vertex -> position, -1 outside G'
  std::vector<std::pair<int, int>> terminal_pairs;
  std::vector<char> is_terminal;      // t of some pair
  std::vector<char> is_pre_terminal;  // r of some pair
};

VertexOrdering order_vertices(const Graph& g, const GPrime& gp);

// close_sets[v] for v in S: the u in S whose expected cross weight range
// overlaps v's, window 13n/delta^(1+eps) + 4. Symmetric, contains v.
std::vector<std::vector<int>> compute_close_sets(const Graph& g, const PartitionState& part,
                                                 const Parameters& p);

// Residue classes mod k: 0/1 for U', 2/3 for usable S vertices, 4/5 for
// the remaining bad ones. base[v] in {0,2,4}, or -1 outside G'.
std::vector<int> residue_bases(const Graph& g, const GPrime& gp);

// Greedy pass pinning every G' vertex's weighted degree mod k into its
// two-value class, changing each touched edge by at most 1 per side.
void residue_fix_c1(const Graph& g, const GPrime& gp, const VertexOrdering& ord,
                    const std::vector<int>& base, std::vector<long long>& f, long long k);

struct GoalReport {
  bool residues_ok = false;       // every G' vertex in its mod-k class
  bool uprime_ok = false;         // distinct anchors across U'
  bool bad_ok = false;            // distinct anchors across U_b \ U'
  bool good_ok = false;           // anchors separate close usable pairs
  bool all() const { return residues_ok && uprime_ok && bad_ok && good_ok; }
  std::string detail;
};

// Anchor placement sweep (the second greedy); mutates f.
void anchor_assign_c2(const Graph& g, const GPrime& gp, const VertexOrdering& ord,
                      const std::vector<std::vector<int>>& close_sets,
                      std::vector<long long>& f, const Parameters& p);

GoalReport check_goals(const Graph& g, const GPrime& gp,
                       const std::vector<std::vector<int>>& close_sets,
                       const std::vector<long long>& f, const Parameters& p);

// Convenience: the whole repair step on top of the step-B weights.
GoalReport run_step_c(const Graph& g, const PartitionState& part, const BadSets& bad,
                      const std::vector<std::vector<int>>& close_sets,
                      std::vector<long long>& f, const Parameters& p);

}  // namespace irs
