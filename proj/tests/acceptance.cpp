// Acceptance suite: nine end-to-end criteria, one PASS/FAIL line each.
// Exit status = number of failed criteria.
#include <chrono>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <vector>

#include "irs/engine.hpp"
#include "irs/oracle.hpp"
#include "irs/step_b.hpp"
#include "irs/step_c.hpp"

using namespace irs;
using Clock = std::chrono::steady_clock;

namespace {

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  int failed = 0;
  void report(int idx, const char* what, bool ok, double secs, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx, what, secs,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failed;
  }
};

bool connected(int n, const std::vector<std::pair<int, int>>& es) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : es) adj[u].push_back(v), adj[v].push_back(u);
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int u : adj[v])
      if (!seen[u]) seen[u] = 1, ++cnt, st.push_back(u);
  }
  return cnt == n;
}

// 1: exact solver on every connected graph with at most 5 vertices.
void criterion1(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph p3(3, {{0, 1}, {1, 2}});
  if (exact_strength(k3).k != 3) ok = false, note = "triangle != 3";
  if (ok && exact_strength(p3).k != 2) ok = false, note = "3-path != 2";
  int graphs = 0;
  for (int n = 3; n <= 5 && ok; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    for (unsigned mask = 1; mask < (1u << all.size()) && ok; ++mask) {
      std::vector<std::pair<int, int>> es;
      for (size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) es.push_back(all[i]);
      if (!connected(n, es)) continue;
      Graph g(n, es);
      ++graphs;
      auto r = exact_strength(g);
      if (r.kind != StrengthResult::Kind::value) {
        ok = false;
        note = "no value on a connected graph";
        break;
      }
      if (!verify_irregular(g, r.witness).valid) {
        ok = false;
        note = "invalid witness";
        break;
      }
      if (r.k > 1 && find_assignment(g, r.k - 1).outcome != SearchOutcome::none) {
        ok = false;
        note = "witness exists below the reported strength";
        break;
      }
    }
  }
  double el = secs_since(t0);
  if (el > 60) ok = false, note = "over 60s";
  t.report(1, "exact strength on all connected graphs up to 5 vertices", ok, el,
           note.empty() ? std::to_string(graphs) + " graphs" : note);
}

// 2: lower bound never exceeds the exact strength; regular formula verbatim.
void criterion2(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 200 && ok) {
    int n = 4 + (int)(rng() % 6);  // 4..9
    std::vector<std::pair<int, int>> all, es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    int m = 3 + (int)(rng() % (all.size() - 3));
    es.assign(all.begin(), all.begin() + m);
    std::sort(es.begin(), es.end());
    Graph g(n, es);
    auto lb = lower_bound(g);
    if (!lb.finite) continue;
    auto ex = exact_strength(g);
    if (ex.kind != StrengthResult::Kind::value) continue;
    ++done;
    if (lb.value > ex.k) {
      ok = false;
      note = "bound " + std::to_string(lb.value) + " above strength " + std::to_string(ex.k);
    }
    if (ok && lb.regular_formula) {
      long long d = g.degree(0);
      if (*lb.regular_formula != (n + d + 1 + d - 1) / d) ok = false, note = "formula mismatch";
    }
  }
  // the published regular-case formula, reproduced exactly
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto lb4 = lower_bound(c4);
  if (ok && (!lb4.regular_formula || *lb4.regular_formula != 4)) ok = false, note = "C4 formula";
  double el = secs_since(t0);
  if (el > 300) ok = false, note = "over 5 minutes";
  t.report(2, "lower bound sound on 200 random graphs up to 9 vertices", ok, el, note);
}

// 3: interval disjointification against brute force.
void criterion3(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int p = 1 + (int)(rng() % 8);
    std::vector<std::pair<long long, long long>> iv(p);
    long long a = (long long)(rng() % 30);
    for (auto& [lo, hi] : iv) {
      lo = a;
      hi = lo + 1 + (long long)(rng() % 5);
      a = lo + (long long)(rng() % 7);
    }
    std::sort(iv.begin(), iv.end());
    auto out = shift_intervals(iv);
    long long cur = -1;
    for (size_t i = 0; i < out.size() && ok; ++i) {
      long long len = iv[i].second - iv[i].first;
      long long want = std::max(iv[i].first, cur);
      if (out[i].first != want || out[i].second != want + len) ok = false;
      cur = out[i].second;
    }
  }
  double el = secs_since(t0);
  if (el > 10) ok = false;
  t.report(3, "interval packing matches brute force on 1000 inputs", ok, el);
}

// 4: residue value-set codec, exhaustive.
void criterion4(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  for (long long k : {7LL, 50LL, 100LL}) {
    ZPrimeCodec c{k};
    long long members = 0;
    for (long long x = 0; x < 500 * k && ok; ++x) {
      if (c.member(x) != (x % k >= 6)) ok = false;
      if (c.rank(x) != members) ok = false;
      if (c.member(x)) {
        if (c.unrank(members) != x) ok = false;
        ++members;
      }
    }
    for (long long r = 0; r <= 1000000 && ok; r += 997) {
      long long x = c.unrank(r);
      if (!c.member(x) || c.rank(x) != r) ok = false;
    }
  }
  double el = secs_since(t0);
  if (el > 10) ok = false;
  t.report(4, "value-set rank/unrank bijection, exhaustive", ok, el);
}

// 5: residue greedy drives every vertex into its two-value class.
void criterion5(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  int done = 0;
  for (long long k : {7LL, 20LL}) {
    int d = 4 * ((int)k + 7);
    int n = 4 * d;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      Graph g = generate_random_regular(n, d, 100 * k + trial);
      GPrime gp;  // treat the whole graph as the repair subgraph
      gp.in_gp.assign(n, 1);
      gp.in_S.assign(n, 0);
      gp.is_Wiso.assign(n, 0);
      gp.in_Uprime.assign(n, 1);
      gp.good.assign(n, 0);
      for (int v = 0; v < n; ++v) gp.vertices.push_back(v);
      gp.adj.resize(n);
      for (int v = 0; v < n; ++v) gp.adj[v] = g.neighbors(v);
      gp.min_degree = d;
      auto ord = order_vertices(g, gp);
      auto base = residue_bases(g, gp);
      std::vector<long long> f(g.m(), k);
      try {
        residue_fix_c1(g, gp, ord, base, f, k);
      } catch (const Error& e) {
        ok = false;
        note = e.what();
        break;
      }
      EdgeWeighting fw{0, f};
      auto wd = weighted_degrees(g, fw);
      for (int v = 0; v < n && ok; ++v) {
        long long r = wd[v] % k;
        if (r != 0 && r != 1) ok = false, note = "vertex outside its class";
      }
      for (long long w : f)
        if (w < 1) ok = false, note = "nonpositive weight";
      ++done;
    }
  }
  double el = secs_since(t0);
  if (el > 30) ok = false, note = "over 30s";
  t.report(5, "residue greedy succeeds on 100 dense graphs, k in {7,20}", ok, el,
           note.empty() ? std::to_string(done) + " graphs" : note);
}

// 6: binning + expectation correction pins distinct admissible values.
void criterion6(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  long long n = 2000, delta = 60;
  Graph g = generate_random_regular((int)n, (int)delta, 6);
  Overrides ov = desk_overrides(n, delta);
  ov.k = 7;  // pinned small modulus
  // a narrow interval width keeps per-edge corrections below the
  // smallest cross weight; overflow shows up as block shifts instead
  ov.s_star = 57;
  ov.a_prime = 120;
  auto p = derive_params(n, delta, 0.2, 0.05, ov);
  int runs = 0;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    auto bins = assign_bins(n, p, 600 + trial);
    auto part = build_partition(bins, p);
    auto f1 = assign_f1(g, part, p);
    auto lay = compute_expected_layout(g, part, p);
    auto bad = detect_bad_sets(g, part, f1, lay, p);
    StepBResult res;
    try {
      res = run_step_b(g, part, bad, lay, f1, p);
    } catch (const RecoverableError& e) {
      ok = false;
      note = e.what();
      break;
    }
    EdgeWeighting fw{0, res.f};
    auto wd = weighted_degrees(g, fw);
    std::set<long long> seen;
    for (int v = 0; v < n && ok; ++v) {
      if (!res.targeted[v]) continue;
      if (wd[v] != res.target[v]) ok = false, note = "missed target";
      long long r = wd[v] % 7;
      if (r >= 0 && r < 6) ok = false, note = "inadmissible residue";
      if (!seen.insert(wd[v]).second) ok = false, note = "duplicate pinned value";
    }
    ++runs;
  }
  double el = secs_since(t0);
  t.report(6, "50 correction runs pin distinct admissible degrees (n=2000, k=7)", ok, el,
           note.empty() ? std::to_string(runs) + " runs" : note);
}

struct E2E {
  std::vector<SolveReport> reports;
  std::vector<Graph> graphs;
};

// 7: twenty seeded end-to-end instances, each valid within the budget.
E2E criterion7(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  E2E out;
  struct Inst {
    const char* family;
    int delta;
    std::uint64_t seed;
  };
  std::vector<Inst> insts;
  for (std::uint64_t s = 1; s <= 7; ++s) insts.push_back({"regular", 50, s});
  for (std::uint64_t s = 1; s <= 7; ++s) insts.push_back({"regular", 100, s});
  for (std::uint64_t s = 1; s <= 6; ++s) insts.push_back({"min_degree", 40, s});
  for (auto& in : insts) {
    Graph g = std::string(in.family) == "regular"
                  ? generate_random_regular(2000, in.delta, in.seed)
                  : generate_min_degree_graph(2000, in.delta, 0.05, in.seed);
    SolveConfig cfg;
    cfg.seed = in.seed;
    cfg.auto_overrides = true;
    auto t1 = Clock::now();
    auto rep = solve(g, cfg);
    double one = secs_since(t1);
    if (!rep.valid) ok = false, note = "invalid result";
    if (one > 60) ok = false, note = "instance over 60s";
    if (!verify_irregular(g, rep.weighting).valid) ok = false, note = "verification failed";
    out.graphs.push_back(std::move(g));
    out.reports.push_back(std::move(rep));
    if (!ok) break;
  }
  t.report(7, "20 end-to-end instances (n=2000) all valid within 60s each", ok, secs_since(t0),
           note);
  return out;
}

// 8: the constructive runs meet every stated goal, audited from the weights.
void criterion8(Tally& t, const E2E& e) {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  int pipeline_runs = 0;
  for (size_t i = 0; i < e.reports.size(); ++i) {
    const auto& rep = e.reports[i];
    if (rep.method != "pipeline") continue;
    ++pipeline_runs;
    if (!rep.goal_report.all()) {
      ok = false;
      note = "goal audit failed: " + rep.goal_report.detail;
      break;
    }
    auto wd = weighted_degrees(e.graphs[i], rep.weighting);
    std::set<long long> s(wd.begin(), wd.end());
    if (s.size() != wd.size()) ok = false, note = "global collision";
  }
  if (pipeline_runs == 0) ok = false, note = "no constructive runs to audit";
  t.report(8, "goal audit holds on every constructive run", ok, secs_since(t0),
           ok ? std::to_string(pipeline_runs) + " runs audited" : note);
}

// 9: reports are byte-stable for a fixed seed once timings are excluded.
void criterion9(Tally& t) {
  auto t0 = Clock::now();
  bool ok = true;
  for (std::uint64_t s : {1ULL, 5ULL}) {
    Graph g1 = generate_random_regular(2000, 50, s);
    Graph g2 = generate_random_regular(2000, 50, s);
    SolveConfig cfg;
    cfg.seed = s;
    cfg.auto_overrides = true;
    auto a = report_to_json(solve(g1, cfg), false).dump();
    auto b = report_to_json(solve(g2, cfg), false).dump();
    if (a != b) ok = false;
  }
  t.report(9, "identical seeds produce byte-identical reports (timings excluded)", ok,
           secs_since(t0));
}

}  // namespace

int main() {
  Tally t;
  criterion1(t);
  criterion2(t);
  criterion3(t);
  criterion4(t);
  criterion5(t);
  criterion6(t);
  auto e2e = criterion7(t);
  criterion8(t, e2e);
  criterion9(t);
  std::printf("%d/9 criteria passed\n", 9 - t.failed);
  return t.failed;
}
