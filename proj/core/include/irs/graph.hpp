#pragma once
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "irs/errors.hpp"

namespace irs {

// Simple undirected graph, vertices 0..n-1, edges stored once with u < v.
// Immutable after construction.
class Graph {
 public:
  struct Adj {
    int to;
    int edge;  // index into edges()
  };

  Graph() = default;
  // Validates: endpoints in range, no self loops, no duplicates.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return (int)edges_.size(); }
  int degree(int v) const { return (int)adj_[v].size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Adj>& neighbors(int v) const { return adj_[v]; }
  // -1 if not an edge
  int edge_index(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Adj>> adj_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  int isolated_vertices = 0;
  int isolated_edges = 0;  // components that are a single edge
};

DegreeStats degree_stats(const Graph& g);

// "u v" per line, 0-based, '#' comments and blank lines ignored.
Graph load_edge_list(std::istream& in);
// Writes edges as "u v" with u < v, ascending lexicographic order.
void write_edge_list(const Graph& g, std::ostream& out);

// Configuration model, resampled from scratch until simple. Requires
// n*d even and d < n.
Graph generate_random_regular(int n, int d, std::uint64_t seed);

// G(n, density) plus augmentation so every vertex ends with degree >= d.
Graph generate_min_degree_graph(int n, int d, double density, std::uint64_t seed);

}  // namespace irs
