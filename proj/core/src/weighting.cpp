#include "irs/weighting.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace irs {

std::vector<long long> weighted_degrees(const Graph& g, const EdgeWeighting& f) {
  if ((int)f.w.size() != g.m()) throw DomainMismatch("weight vector size != edge count");
  std::vector<long long> wd(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    wd[u] += f.w[e];
    wd[v] += f.w[e];
  }
  return wd;
}

VerificationResult verify_irregular(const Graph& g, const EdgeWeighting& f) {
  if ((int)f.w.size() != g.m()) throw DomainMismatch("weight vector size != edge count");
  for (int e = 0; e < g.m(); ++e)
    if (f.w[e] < 1 || f.w[e] > f.k) {
      auto [u, v] = g.edges()[e];
      return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") weight " +
                         std::to_string(f.w[e]) + " outside [1," + std::to_string(f.k) + "]"};
    }
  auto wd = weighted_degrees(g, f);
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return wd[a] < wd[b] || (wd[a] == wd[b] && a < b); });
  for (int i = 1; i < g.n(); ++i) {
    int a = order[i - 1], b = order[i];
    if (wd[a] == wd[b])
      return {false, "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                         " share weighted degree " + std::to_string(wd[a])};
  }
  return {true, ""};
}

LowerBound lower_bound(const Graph& g) {
  LowerBound lb;
  auto st = degree_stats(g);
  if (st.isolated_edges > 0 || st.isolated_vertices >= 2) {
    lb.finite = false;
    lb.value = 0;
    return lb;
  }
  if (g.n() > 0 && st.min_degree == st.max_degree && st.min_degree >= 1) {
    long long n = g.n(), d = st.min_degree;
    lb.regular_formula = (n + d + 1 + d - 1) / d;  // ceil((n+d+1)/d)
  }
  // Counting bound: vertices of degree in [min_degree, t] take weighted
  // degrees in [max(1,min_degree), t*k], so k >= (N + min_degree - 1) / t.
  long long best = 1;
  long long dmin = std::max(1, st.min_degree);
  std::vector<long long> count_by_deg(st.max_degree + 1, 0);
  for (int v = 0; v < g.n(); ++v) ++count_by_deg[g.degree(v)];
  long long running = 0;
  for (long long t = dmin; t <= st.max_degree; ++t) {
    running += count_by_deg[t];
    long long need = (running + dmin - 1 + t - 1) / t;  // ceil((N + dmin - 1)/t)
    best = std::max(best, need);
  }
  lb.value = best;
  return lb;
}

void write_weighting(const Graph& g, const EdgeWeighting& f, std::ostream& out) {
  if ((int)f.w.size() != g.m()) throw DomainMismatch("weight vector size != edge count");
  out << "k=" << f.k << '\n';
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    out << u << ' ' << v << ' ' << f.w[e] << '\n';
  }
}

EdgeWeighting read_weighting(const Graph& g, std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("k=", 0) != 0)
    throw ParseError("expected header line k=<int>");
  EdgeWeighting f;
  try {
    f.k = std::stoll(line.substr(2));
  } catch (...) {
    throw ParseError("bad k header: " + line);
  }
  f.w.assign(g.m(), 0);
  std::vector<char> seen(g.m(), 0);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v, w;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> w)) throw ParseError("line " + std::to_string(lineno) + ": expected u v w");
    int e = g.edge_index((int)u, (int)v);
    if (e < 0)
      throw DomainMismatch("line " + std::to_string(lineno) + ": (" + std::to_string(u) + "," +
                           std::to_string(v) + ") is not an edge of the graph");
    if (seen[e]) throw DuplicateEdgeError("line " + std::to_string(lineno) + ": edge listed twice");
    seen[e] = 1;
    f.w[e] = w;
  }
  for (int e = 0; e < g.m(); ++e)
    if (!seen[e]) throw DomainMismatch("missing weight for edge index " + std::to_string(e));
  return f;
}

}  // namespace irs
