#include "irs/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace irs {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw SelfLoopError("self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw DuplicateEdgeError("duplicate edge " + std::to_string(edges[i].first) + " " +
                               std::to_string(edges[i].second));
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (int e = 0; e < (int)edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
  }
  for (auto& a : adj_)
    std::sort(a.begin(), a.end(), [](const Adj& x, const Adj& y) { return x.to < y.to; });
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v,
                             [](const Adj& x, int t) { return x.to < t; });
  if (it != a.end() && it->to == v) return it->edge;
  return -1;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.n() == 0) return s;
  s.min_degree = g.n();
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    if (d == 0) ++s.isolated_vertices;
  }
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 1 && g.degree(v) == 1) ++s.isolated_edges;
  return s;
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_v = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
    std::string rest;
    if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0) throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
    edges.emplace_back((int)u, (int)v);
    max_v = std::max(max_v, (int)std::max(u, v));
  }
  return Graph(max_v + 1, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph generate_random_regular(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n || (1LL * n * d) % 2 != 0)
    throw InfeasibleDegreeSequence("no simple " + std::to_string(d) + "-regular graph on " +
                                   std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  // Configuration model: pair random stubs, rejecting self loops and
  // duplicates locally; restart the whole sample if pairing gets stuck.
  std::vector<int> stubs;
  stubs.reserve((size_t)n * d);
  for (;;) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    std::set<std::pair<int, int>> seen;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      int misses = 0;
      for (;;) {
        size_t i = std::uniform_int_distribution<size_t>(0, stubs.size() - 1)(rng);
        size_t j = std::uniform_int_distribution<size_t>(0, stubs.size() - 2)(rng);
        if (j >= i) ++j;
        int u = stubs[i], v = stubs[j];
        auto e = std::minmax(u, v);
        if (u != v && !seen.count({e.first, e.second})) {
          seen.insert({e.first, e.second});
          if (i < j) std::swap(i, j);
          stubs[i] = stubs.back(); stubs.pop_back();
          stubs[j] = stubs.back(); stubs.pop_back();
          break;
        }
        if (++misses > 200) { stuck = true; break; }
      }
    }
    if (stuck) continue;
    return Graph(n, std::vector<std::pair<int, int>>(seen.begin(), seen.end()));
  }
}

Graph generate_min_degree_graph(int n, int d, double density, std::uint64_t seed) {
  if (d < 0 || d >= n) throw InfeasibleDegreeSequence("min degree must satisfy 0 <= d < n");
  if (density < 0.0 || density > 1.0) throw InvalidParameters("density must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<int, int>> edges;
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < density) {
        edges.insert({u, v});
        ++deg[u];
        ++deg[v];
      }
  // Augment deficient vertices with random new partners.
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int u = 0; u < n; ++u) {
    int guard = 0;
    while (deg[u] < d) {
      if (++guard > 100 * n) throw InfeasibleDegreeSequence("augmentation stuck");
      int v = pick(rng);
      if (v == u) continue;
      auto e = std::minmax(u, v);
      if (edges.insert({e.first, e.second}).second) {
        ++deg[u];
        ++deg[v];
      }
    }
  }
  return Graph(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

}  // namespace irs
