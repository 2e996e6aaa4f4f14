#include "irs/step_c.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace irs {

namespace {
long long half_unit(const Parameters& p) {
  return (p.ceil_n_over_delta() + 1) / 2;  // ceil(ceil(n/delta)/2)
}

std::vector<long long> full_weighted_degrees(const Graph& g, const std::vector<long long>& f) {
  std::vector<long long> wd(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    wd[u] += f[e];
    wd[v] += f[e];
  }
  return wd;
}
}  // namespace

GPrime build_gprime(const Graph& g, const PartitionState& part, const BadSets& bad,
                    const Parameters& p) {
  GPrime gp;
  int n = g.n();
  gp.in_S.assign(part.in_S.begin(), part.in_S.end());
  gp.in_gp.assign(n, 0);
  gp.good.assign(bad.u_g.begin(), bad.u_g.end());
  for (int v = 0; v < n; ++v) gp.in_gp[v] = part.in_S[v] || bad.u_b[v];
  gp.adj.assign(n, {});
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    bool keep = (part.in_S[u] && part.in_S[v]) ||
                (bad.u_b[u] && part.in_S[v]) || (bad.u_b[v] && part.in_S[u]) ||
                (bad.y_s[u] && bad.y_sn[v]) || (bad.y_s[v] && bad.y_sn[u]);
    if (!keep) continue;
    gp.adj[u].push_back({v, e});
    gp.adj[v].push_back({u, e});
  }
  gp.is_Wiso.assign(n, 0);
  gp.in_Uprime.assign(n, 0);
  gp.min_degree = -1;
  for (int v = 0; v < n; ++v) {
    if (!gp.in_gp[v]) continue;
    std::sort(gp.adj[v].begin(), gp.adj[v].end(),
              [](const Graph::Adj& a, const Graph::Adj& b) { return a.to < b.to; });
    gp.vertices.push_back(v);
    long long d = (long long)gp.adj[v].size();
    if (gp.min_degree < 0 || d < gp.min_degree) gp.min_degree = d;
    if (part.in_S[v]) {
      bool iso = true;
      for (const auto& a : gp.adj[v])
        if (part.in_S[a.to]) { iso = false; break; }
      gp.is_Wiso[v] = iso;
    }
  }
  for (int v : gp.vertices) gp.in_Uprime[v] = !gp.in_S[v] || gp.is_Wiso[v];
  if (p.mode == ParamMode::overridden && !gp.vertices.empty() &&
      gp.min_degree < 2 * p.k + 14)
    throw GreedyInfeasible("repair subgraph min degree " + std::to_string(gp.min_degree) +
                           " below greedy floor " + std::to_string(2 * p.k + 14));
  return gp;
}

void init_weights_c(const Graph& g, const GPrime& gp, std::vector<long long>& f,
                    const Parameters& p) {
  long long h = half_unit(p);
  std::vector<char> seen(g.m(), 0);
  for (int v : gp.vertices)
    for (const auto& a : gp.adj[v]) {
      if (seen[a.edge]) continue;
      seen[a.edge] = 1;
      if (gp.in_S[v] == gp.in_S[a.to]) f[a.edge] = h;
    }
}

VertexOrdering order_vertices(const Graph& g, const GPrime& gp) {
  VertexOrdering ord;
  ord.pos.assign(g.n(), -1);
  ord.is_terminal.assign(g.n(), 0);
  ord.is_pre_terminal.assign(g.n(), 0);

  // reversed BFS of one component from the lowest-index root; root ends last
  auto reversed_bfs = [&](int root, auto&& allowed) {
    std::vector<int> bfs;
    std::set<int> seen{root};
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      bfs.push_back(v);
      for (const auto& a : gp.adj[v])
        if (allowed(a.to) && seen.insert(a.to).second) q.push_back(a.to);
    }
    std::reverse(bfs.begin(), bfs.end());
    return bfs;
  };

  auto emit_component = [&](const std::vector<int>& comp_order) {
    if (comp_order.size() >= 2) {
      int t = comp_order.back();
      int r = comp_order[comp_order.size() - 2];
      ord.terminal_pairs.emplace_back(r, t);
      ord.is_terminal[t] = 1;
      ord.is_pre_terminal[r] = 1;
    }
    for (int v : comp_order) {
      ord.pos[v] = (int)ord.order.size();
      ord.order.push_back(v);
    }
  };

  auto in_Uprime = [&](int v) { return gp.in_gp[v] && gp.in_Uprime[v]; };
  auto in_Slow = [&](int v) { return gp.in_gp[v] && gp.in_S[v]; };

  // isolated vertices of G'[U'] first, ascending
  std::vector<char> placed(g.n(), 0);
  for (int v : gp.vertices) {
    if (!gp.in_Uprime[v]) continue;
    bool iso = true;
    for (const auto& a : gp.adj[v])
      if (in_Uprime(a.to)) { iso = false; break; }
    if (iso) {
      ord.pos[v] = (int)ord.order.size();
      ord.order.push_back(v);
      placed[v] = 1;
    }
  }
  // components of G'[U']
  for (int v : gp.vertices) {
    if (!gp.in_Uprime[v] || placed[v] || ord.pos[v] >= 0) continue;
    auto comp = reversed_bfs(v, in_Uprime);
    emit_component(comp);
    for (int u : comp) placed[u] = 1;
  }
  // non-trivial components of G'[S]; its isolated vertices are in U'
  for (int v : gp.vertices) {
    if (!gp.in_S[v] || gp.is_Wiso[v] || ord.pos[v] >= 0) continue;
    auto comp = reversed_bfs(v, [&](int u) { return in_Slow(u) && !gp.is_Wiso[u]; });
    emit_component(comp);
  }

  if (ord.order.size() != gp.vertices.size())
    throw OrderingInvariantViolation("ordering missed vertices");
  // Terminal pairs must be adjacent in G' and type-homogeneous.
  for (auto [r, t] : ord.terminal_pairs) {
    bool adjacent = false;
    for (const auto& a : gp.adj[r])
      if (a.to == t) adjacent = true;
    if (!adjacent) throw OrderingInvariantViolation("terminal pair not adjacent");
    if (gp.in_Uprime[r] != gp.in_Uprime[t])
      throw OrderingInvariantViolation("terminal pair spans both sides");
  }
  return ord;
}

std::vector<std::vector<int>> compute_close_sets(const Graph& g, const PartitionState& part,
                                                 const Parameters& p) {
  std::vector<std::vector<int>> L(g.n());
  long long q = p.ceil_n_over_delta();
  long long c = (q + 3 * p.k_prime - 1) / (3 * p.k_prime);
  double win = 13.0 * (double)p.n / std::pow((double)p.delta, 1.0 + p.epsilon) + 4.0;
  std::vector<int> sv;
  for (int v = 0; v < g.n(); ++v)
    if (part.in_S[v]) sv.push_back(v);
  for (int v : sv) {
    double ev = (double)(c * (p.k_prime + part.subset[v]));
    double dv = (double)g.degree(v);
    for (int u : sv) {
      double eu = (double)(c * (p.k_prime + part.subset[u]));
      double du = (double)g.degree(u);
      if ((ev + win) * dv > (eu - win) * du && (ev - win) * dv < (eu + win) * du)
        L[v].push_back(u);
    }
  }
  return L;
}

std::vector<int> residue_bases(const Graph& g, const GPrime& gp) {
  std::vector<int> base(g.n(), -1);
  for (int v : gp.vertices) {
    if (gp.in_Uprime[v]) base[v] = 0;
    else if (gp.good[v]) base[v] = 2;
    else base[v] = 4;
  }
  return base;
}

void residue_fix_c1(const Graph& g, const GPrime& gp, const VertexOrdering& ord,
                    const std::vector<int>& base, std::vector<long long>& f, long long k) {
  auto wd = full_weighted_degrees(g, f);
  auto res_of = [&](long long w) { return ((w % k) + k) % k; };

  for (int v : ord.order) {
    std::vector<int> plus_edges, minus_edges;  // edge ids usable for +1 / -1
    std::vector<int> plus_other, minus_other;
    for (const auto& a : gp.adj[v]) {
      if (ord.pos[a.to] > ord.pos[v]) {
        plus_edges.push_back(a.edge);
        plus_other.push_back(a.to);
      } else {
        long long r = res_of(wd[a.to]);
        if (r == base[a.to]) {
          plus_edges.push_back(a.edge);
          plus_other.push_back(a.to);
        } else if (f[a.edge] >= 2) {
          minus_edges.push_back(a.edge);
          minus_other.push_back(a.to);
        }
      }
    }
    long long lo = wd[v] - (long long)minus_edges.size();
    long long hi = wd[v] + (long long)plus_edges.size();
    if (hi - lo + 1 < k + 6)
      throw GreedyInfeasible("vertex " + std::to_string(v) + " reaches only " +
                             std::to_string(hi - lo + 1) + " consecutive sums, needs " +
                             std::to_string(k + 6));
    long long target = lo;
    while (res_of(target) != base[v] && res_of(target) != base[v] + 1) ++target;
    long long d = target - wd[v];
    if (d >= 0) {
      for (long long i = 0; i < d; ++i) {
        f[plus_edges[i]] += 1;
        wd[plus_other[i]] += 1;
      }
    } else {
      for (long long i = 0; i < -d; ++i) {
        f[minus_edges[i]] -= 1;
        wd[minus_other[i]] -= 1;
      }
    }
    wd[v] = target;
  }
  for (int v : ord.order) {
    long long r = res_of(wd[v]);
    if (r != base[v] && r != base[v] + 1)
      throw GreedyInfeasible("residue drifted out of class during the pass");
  }
}

namespace {

// Bookkeeping for the anchor sweep.
struct AnchorRec {
  bool assigned = false;
  int l = 0;          // residue mod k, frozen after the residue pass
  long long a = 0;    // class index
  long long lam = 0;  // pair index within the class
};

struct AnchorCtx {
  const Graph& g;
  const GPrime& gp;
  const VertexOrdering& ord;
  const std::vector<std::vector<int>>& close_sets;
  std::vector<long long>& f;
  const Parameters& p;

  long long k, tb, tg, T;
  std::vector<long long> wd;
  std::vector<AnchorRec> rec;
  // aggregate occupancy for group 0 (U') and group 1 (bad, not U')
  std::map<std::pair<long long, long long>, long long> occ[2];           // (l,a)->count
  std::map<std::tuple<long long, long long, long long>, char> taken[2];  // (l,a,lam)

  AnchorCtx(const Graph& g_, const GPrime& gp_, const VertexOrdering& ord_,
            const std::vector<std::vector<int>>& cs, std::vector<long long>& f_,
            const Parameters& p_)
      : g(g_), gp(gp_), ord(ord_), close_sets(cs), f(f_), p(p_) {
    k = p.k;
    tb = p.t_b;
    tg = p.t_g;
    T = tg / tb;
    wd = full_weighted_degrees(g, f);
    rec.assign(g.n(), {});
  }

  int group_of(int v) const {
    if (gp.in_Uprime[v]) return 0;
    return gp.good[v] ? 2 : 1;
  }
  long long period(int v) const { return group_of(v) == 0 ? tb : tg; }
  long long class_count(int v) const { return group_of(v) == 0 ? tb : tg; }
  long long res_mod_k(long long w) const { return ((w % k) + k) % k; }

  bool edge_active(int v, int to) const {
    return !gp.good[v] || (gp.in_S[v] && gp.in_S[to]);
  }

  // class of v's weight, given its residue l
  long long class_of(int v, long long l) const {
    return ((wd[v] - l) / k) % class_count(v);
  }
  // element index of v's weight within class (group 0: mod-wrapped)
  long long elem_index(int v) const {
    if (group_of(v) == 0) {
      long long M = tg * k;
      long long x = ((wd[v] % M) + M) % M;
      return (x - rec[v].l - rec[v].a * k) / (tb * k);
    }
    return (wd[v] - rec[v].l - rec[v].a * k) / (tg * k);
  }

  // occupancy per class for a good vertex (close-set relative)
  std::vector<long long> good_occupancy(int v, long long l) const {
    std::vector<long long> occv(tg, 0);
    for (int u : close_sets[v])
      if (u != v && rec[u].assigned && rec[u].l == l && group_of(u) == 2) ++occv[rec[u].a];
    return occv;
  }
  bool good_blocked(int v, long long l, long long a, long long lam) const {
    for (int u : close_sets[v])
      if (u != v && rec[u].assigned && rec[u].l == l && group_of(u) == 2 && rec[u].a == a &&
          rec[u].lam == lam)
        return true;
    return false;
  }

  long long pick_class(int v, long long l) {
    int grp = group_of(v);
    long long cc = class_count(v);
    if (grp == 2) {
      auto occv = good_occupancy(v, l);
      long long best = 0;
      for (long long a = 1; a < cc; ++a)
        if (occv[a] < occv[best]) best = a;
      return best;
    }
    long long best = 0, bestc = -1;
    for (long long a = 0; a < cc; ++a) {
      auto it = occ[grp].find({l, a});
      long long cnt = it == occ[grp].end() ? 0 : it->second;
      if (bestc < 0 || cnt < bestc) {
        bestc = cnt;
        best = a;
      }
      if (bestc == 0) break;  // ties resolve to the smallest a anyway
    }
    return best;
  }

  long long occupancy(int v, long long l, long long a) {
    int grp = group_of(v);
    if (grp == 2) {
      long long c = 0;
      for (int u : close_sets[v])
        if (u != v && rec[u].assigned && rec[u].l == l && group_of(u) == 2 && rec[u].a == a) ++c;
      return c;
    }
    auto it = occ[grp].find({l, a});
    return it == occ[grp].end() ? 0 : it->second;
  }

  bool blocked(int v, long long l, long long a, long long lam) {
    int grp = group_of(v);
    if (grp == 2) return good_blocked(v, l, a, lam);
    return taken[grp].count({l, a, lam}) > 0;
  }

  void record(int v, long long l, long long a, long long lam) {
    rec[v] = {true, (int)l, a, lam};
    int grp = group_of(v);
    if (grp != 2) {
      ++occ[grp][{l, a}];
      taken[grp][{l, a, lam}] = 1;
    }
  }

  void bump_edge(int e, long long amount) {
    auto [x, y] = g.edges()[e];
    f[e] += amount;
    wd[x] += amount;
    wd[y] += amount;
    if (f[e] < 1) throw CapacityExceeded("anchor sweep drove an edge non-positive");
  }

  // Sweep-capable edges of v, excluding `skip_edge`. Returns the step
  // magnitude used on them (period(v) * k) via out lists.
  void sweep_edges(int v, int skip_edge, std::vector<int>& ups, std::vector<int>& downs) {
    long long M = period(v) * k;
    for (const auto& a : gp.adj[v]) {
      if (a.edge == skip_edge || !edge_active(v, a.to)) continue;
      if (ord.pos[a.to] > ord.pos[v]) {
        ups.push_back(a.edge);
        continue;
      }
      int u = a.to;
      if (!rec[u].assigned) throw OrderingInvariantViolation("backward neighbor unassigned");
      if (gp.in_Uprime[u] && group_of(v) != 0) {
        ups.push_back(a.edge);  // full-period step, invisible to u's anchor
        continue;
      }
      if (elem_index(u) % 2 == 0) ups.push_back(a.edge);
      else if (f[a.edge] > M) downs.push_back(a.edge);
    }
  }

  // Place v into class a (its weight is already congruent to l + a*k
  // modulo period*k): find the first free pair reachable through the
  // sweep edges and move there.
  void settle(int v, long long l, long long a, int skip_edge) {
    long long M = period(v) * k;
    std::vector<int> ups, downs;
    sweep_edges(v, skip_edge, ups, downs);
    long long U = (long long)ups.size(), D = (long long)downs.size();

    std::map<long long, long long> reach;  // element index -> signed step count
    if (group_of(v) == 0) {
      long long M_g = tg * k;
      long long x = ((wd[v] % M_g) + M_g) % M_g;
      long long m0 = (x - l - a * k) / (tb * k);
      for (long long j = 0; j <= U; ++j) reach.try_emplace(((m0 + j) % T + T) % T, j);
      for (long long j = 1; j <= D; ++j) reach.try_emplace(((m0 - j) % T + T) % T, -j);
    } else {
      long long m0 = (wd[v] - l - a * k) / (M * 1);
      for (long long j = 0; j <= U; ++j) reach.try_emplace(m0 + j, j);
      for (long long j = 1; j <= D && m0 - j >= 0; ++j) reach.try_emplace(m0 - j, -j);
    }
    long long lam_limit = group_of(v) == 0 ? T / 2 : (reach.empty() ? 0 : reach.rbegin()->first / 2 + 1);
    for (long long lam = 0; lam < lam_limit; ++lam) {
      if (blocked(v, l, a, lam)) continue;
      for (long long m : {2 * lam, 2 * lam + 1}) {
        auto it = reach.find(m);
        if (it == reach.end()) continue;
        long long j = it->second;
        if (j >= 0)
          for (long long i = 0; i < j; ++i) bump_edge(ups[i], M);
        else
          for (long long i = 0; i < -j; ++i) bump_edge(downs[i], -M);
        record(v, l, a, lam);
        return;
      }
    }
    throw CapacityExceeded("no reachable free anchor pair for vertex " + std::to_string(v));
  }

  void process_single(int v) {
    long long l = res_mod_k(wd[v]);
    long long a = pick_class(v, l);
    // designated forward edge sets the class
    int e0 = -1;
    for (const auto& ad : gp.adj[v])
      if (ord.pos[ad.to] > ord.pos[v] && edge_active(v, ad.to)) { e0 = ad.edge; break; }
    if (e0 < 0) throw OrderingInvariantViolation("non-terminal vertex lacks a forward edge");
    long long cc = class_count(v);
    long long cur = class_of(v, l);
    long long shift = ((a - cur) % cc + cc) % cc;
    if (shift > 0) bump_edge(e0, shift * k);
    settle(v, l, a, e0);
  }

  void process_pair(int r, int t) {
    int e_rt = -1;
    for (const auto& ad : gp.adj[r])
      if (ad.to == t) { e_rt = ad.edge; break; }
    if (e_rt < 0 || !edge_active(r, t))
      throw OrderingInvariantViolation("terminal pair lacks an active shared edge");
    long long l_r = res_mod_k(wd[r]), l_t = res_mod_k(wd[t]);
    long long P = period(r);
    long long best_m = 0, best_score = -1;
    for (long long m = 0; m <= P; ++m) {
      long long ar = ((wd[r] + m * k - l_r) / k) % class_count(r);
      long long at = ((wd[t] + m * k - l_t) / k) % class_count(t);
      long long score = std::max(occupancy(r, l_r, ar), occupancy(t, l_t, at));
      if (best_score < 0 || score < best_score) {
        best_score = score;
        best_m = m;
      }
    }
    if (best_m > 0) bump_edge(e_rt, best_m * k);
    long long a_r = class_of(r, l_r);
    settle(r, l_r, a_r, e_rt);
    long long a_t = class_of(t, l_t);
    settle(t, l_t, a_t, e_rt);
  }

  void run() {
    // capacity preconditions for the two greedy regimes
    long long bad_count = 0, max_close = 0;
    for (int v : gp.vertices)
      if (!gp.good[v]) ++bad_count;
    for (int v : gp.vertices)
      if (gp.good[v]) max_close = std::max(max_close, (long long)close_sets[v].size());
    double lhs_b = std::min((double)T, (double)p.s_star / 2.0);
    if (!(lhs_b > 4.0 * (double)bad_count / (double)tb + 2.0))
      throw CapacityExceeded("anchor capacity: bad set too large for t_b");
    if (max_close > 0 && !((double)p.s_star / 2.0 > 4.0 * (double)max_close / (double)tg + 2.0))
      throw CapacityExceeded("anchor capacity: close sets too large for t_g");

    for (int idx = 0; idx < (int)ord.order.size(); ++idx) {
      int v = ord.order[idx];
      if (ord.is_terminal[v]) continue;  // handled with its partner
      if (ord.is_pre_terminal[v]) {
        int t = -1;
        for (auto [rr, tt] : ord.terminal_pairs)
          if (rr == v) t = tt;
        process_pair(v, t);
      } else {
        process_single(v);
      }
    }
  }
};

}  // namespace

void anchor_assign_c2(const Graph& g, const GPrime& gp, const VertexOrdering& ord,
                      const std::vector<std::vector<int>>& close_sets,
                      std::vector<long long>& f, const Parameters& p) {
  AnchorCtx ctx(g, gp, ord, close_sets, f, p);
  ctx.run();
}

GoalReport check_goals(const Graph& g, const GPrime& gp,
                       const std::vector<std::vector<int>>& close_sets,
                       const std::vector<long long>& f, const Parameters& p) {
  GoalReport rep;
  auto wd = full_weighted_degrees(g, f);
  long long k = p.k, tb = p.t_b, tg = p.t_g;
  auto base = residue_bases(g, gp);

  rep.residues_ok = true;
  for (int v : gp.vertices) {
    long long r = ((wd[v] % k) + k) % k;
    if (r != base[v] && r != base[v] + 1) {
      rep.residues_ok = false;
      rep.detail += "residue off-class at vertex " + std::to_string(v) + "; ";
      break;
    }
  }

  auto anchor_id = [&](int v) {
    long long l = ((wd[v] % k) + k) % k;
    long long am;
    if (gp.in_Uprime[v]) {
      long long M = tg * k;
      long long x = ((wd[v] % M) + M) % M;
      am = (x - l) / k;  // in [0, tg)
      long long a = am % tb, m = am / tb;
      return std::tuple<long long, long long, long long>{l, a, m / 2};
    }
    am = (wd[v] - l) / k;
    long long a = am % tg, m = am / tg;
    return std::tuple<long long, long long, long long>{l, a, m / 2};
  };

  rep.uprime_ok = true;
  rep.bad_ok = true;
  std::set<std::tuple<long long, long long, long long>> seen_u, seen_b;
  for (int v : gp.vertices) {
    if (gp.in_Uprime[v]) {
      if (!seen_u.insert(anchor_id(v)).second) {
        rep.uprime_ok = false;
        rep.detail += "duplicate constrained anchor at vertex " + std::to_string(v) + "; ";
      }
    } else if (!gp.good[v]) {
      if (!seen_b.insert(anchor_id(v)).second) {
        rep.bad_ok = false;
        rep.detail += "duplicate bad anchor at vertex " + std::to_string(v) + "; ";
      }
    }
  }

  rep.good_ok = true;
  for (int v : gp.vertices) {
    if (!gp.good[v]) continue;
    for (int u : close_sets[v]) {
      if (u <= v || !gp.in_gp[u] || !gp.good[u]) continue;
      if (anchor_id(u) == anchor_id(v)) {
        rep.good_ok = false;
        rep.detail += "close usable pair " + std::to_string(v) + "," + std::to_string(u) +
                      " shares an anchor; ";
      }
    }
  }
  return rep;
}

GoalReport run_step_c(const Graph& g, const PartitionState& part, const BadSets& bad,
                      const std::vector<std::vector<int>>& close_sets,
                      std::vector<long long>& f, const Parameters& p) {
  GPrime gp = build_gprime(g, part, bad, p);
  if (gp.vertices.empty()) return {true, true, true, true, ""};
  init_weights_c(g, gp, f, p);
  VertexOrdering ord = order_vertices(g, gp);
  auto base = residue_bases(g, gp);
  residue_fix_c1(g, gp, ord, base, f, p.k);
  anchor_assign_c2(g, gp, ord, close_sets, f, p);
  return check_goals(g, gp, close_sets, f, p);
}

}  // namespace irs
