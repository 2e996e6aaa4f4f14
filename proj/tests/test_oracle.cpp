#include <doctest.h>

#include <random>
#include <vector>

#include "irs/oracle.hpp"

using namespace irs;

namespace {

// Independent check: enumerate every weighting of a tiny graph with
// nested loops and report whether any is irregular.
bool brute_exists(const Graph& g, long long k) {
  int m = g.m();
  std::vector<long long> w(m, 1);
  while (true) {
    EdgeWeighting f{k, w};
    if (verify_irregular(g, f).valid) return true;
    int i = 0;
    while (i < m && w[i] == k) w[i++] = 1;
    if (i == m) return false;
    ++w[i];
  }
}

}  // namespace

TEST_CASE("frozen exact values") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  auto r = exact_strength(k3);
  REQUIRE(r.kind == StrengthResult::Kind::value);
  CHECK(r.k == 3);
  CHECK(verify_irregular(k3, r.witness).valid);

  Graph p3(3, {{0, 1}, {1, 2}});
  auto p = exact_strength(p3);
  REQUIRE(p.kind == StrengthResult::Kind::value);
  CHECK(p.k == 2);

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(exact_strength(k4).k == 3);

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(exact_strength(c5).k == 3);
}

TEST_CASE("infinite strength detected") {
  CHECK(exact_strength(Graph(2, {{0, 1}})).kind == StrengthResult::Kind::infinite);
  CHECK(exact_strength(Graph(5, {{0, 1}, {1, 2}, {0, 2}})).kind ==
        StrengthResult::Kind::infinite);  // two isolated vertices
  // one isolated vertex is fine
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(exact_strength(g).kind == StrengthResult::Kind::value);
}

TEST_CASE("find_assignment agrees with nested-loop enumeration") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 60) {
    int n = 3 + (int)(rng() % 3);  // 3..5 vertices
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    int m = 1 + (int)(rng() % 4);  // at most 4 edges
    all.resize(std::min<size_t>(m, all.size()));
    std::sort(all.begin(), all.end());
    Graph g(n, all);
    for (long long k = 1; k <= 4; ++k) {
      auto r = find_assignment(g, k);
      REQUIRE(r.outcome != SearchOutcome::exhausted);
      bool brute = brute_exists(g, k);
      CHECK((r.outcome == SearchOutcome::found) == brute);
      if (r.outcome == SearchOutcome::found)
        CHECK(verify_irregular(g, r.witness).valid);
    }
    ++done;
  }
}

TEST_CASE("no witness exists below the exact strength") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto r = exact_strength(c5);
  REQUIRE(r.kind == StrengthResult::Kind::value);
  CHECK(find_assignment(c5, r.k - 1).outcome == SearchOutcome::none);
  CHECK(find_assignment(c5, r.k).outcome == SearchOutcome::found);
}

TEST_CASE("budget exhaustion reported") {
  Graph g = generate_random_regular(12, 3, 5);
  SearchBudget tiny{5};
  auto r = find_assignment(g, 2, tiny);
  CHECK(r.outcome == SearchOutcome::exhausted);
}
