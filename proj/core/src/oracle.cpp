#include "irs/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace irs {

namespace {

struct Searcher {
  const Graph& g;
  long long k;
  long long budget;
  long long nodes = 0;
  std::vector<int> edge_order;
  std::vector<int> remaining;       // unassigned incident edges per vertex
  std::vector<long long> wd;        // partial weighted degree
  std::unordered_map<long long, int> finished;  // weighted degree -> count
  std::vector<long long> weights;
  bool out_of_budget = false;

  explicit Searcher(const Graph& g_, long long k_, long long budget_)
      : g(g_), k(k_), budget(budget_) {
    edge_order.resize(g.m());
    for (int e = 0; e < g.m(); ++e) edge_order[e] = e;
    std::stable_sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
      auto [au, av] = g.edges()[a];
      auto [bu, bv] = g.edges()[b];
      return g.degree(au) + g.degree(av) > g.degree(bu) + g.degree(bv);
    });
    remaining.resize(g.n());
    for (int v = 0; v < g.n(); ++v) remaining[v] = g.degree(v);
    wd.assign(g.n(), 0);
    weights.assign(g.m(), 0);
  }

  // Always increments the count; false means collision (caller must
  // still unfinish on rollback).
  bool finish(int v) {
    auto [it, fresh] = finished.try_emplace(wd[v], 0);
    return ++it->second <= 1;
  }
  void unfinish(int v) {
    auto it = finished.find(wd[v]);
    if (--it->second == 0) finished.erase(it);
  }

  bool search(int idx) {
    if (idx == g.m()) return true;
    int e = edge_order[idx];
    auto [u, v] = g.edges()[e];
    for (long long w = 1; w <= k; ++w) {
      if (++nodes > budget) { out_of_budget = true; return false; }
      weights[e] = w;
      wd[u] += w;
      wd[v] += w;
      --remaining[u];
      --remaining[v];
      bool ok = true;
      bool u_fin = false, v_fin = false;
      if (remaining[u] == 0) { u_fin = true; ok = finish(u); }
      if (ok && remaining[v] == 0) { v_fin = true; ok = finish(v); }
      if (ok && search(idx + 1)) return true;
      if (v_fin) unfinish(v);
      if (u_fin) unfinish(u);
      ++remaining[u];
      ++remaining[v];
      wd[u] -= w;
      wd[v] -= w;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

AssignmentResult find_assignment(const Graph& g, long long k, const SearchBudget& budget) {
  AssignmentResult res;
  if (k < 1) { res.outcome = SearchOutcome::none; return res; }
  Searcher s(g, k, budget.max_nodes);
  // Degree-0 vertices are finished at weighted degree 0 from the start.
  bool feasible = true;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0 && !s.finish(v)) feasible = false;
  bool found = feasible && s.search(0);
  res.nodes = s.nodes;
  if (found) {
    res.outcome = SearchOutcome::found;
    res.witness.k = k;
    res.witness.w = s.weights;
  } else if (s.out_of_budget) {
    res.outcome = SearchOutcome::exhausted;
  } else {
    res.outcome = SearchOutcome::none;
  }
  return res;
}

StrengthResult exact_strength(const Graph& g, const SearchBudget& budget) {
  StrengthResult res;
  auto lb = lower_bound(g);
  if (!lb.finite) { res.kind = StrengthResult::Kind::infinite; return res; }
  for (long long k = std::max(1LL, lb.value);; ++k) {
    auto r = find_assignment(g, k, budget);
    if (r.outcome == SearchOutcome::found) {
      res.kind = StrengthResult::Kind::value;
      res.k = k;
      res.witness = std::move(r.witness);
      return res;
    }
    if (r.outcome == SearchOutcome::exhausted) {
      res.kind = StrengthResult::Kind::exhausted;
      return res;
    }
  }
}

}  // namespace irs
