#ifndef LPBP_ORACLES_HPP
#define LPBP_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "lpbp/factor_graph.hpp"
#include "lpbp/polytope.hpp"
#include "lpbp/rational.hpp"

namespace lpbp {

// Independent ground truth at desk scale, exact rational arithmetic
// throughout. The combinatorial caps hard-fail; an oracle never approximates.

class OracleCapExceeded : public std::runtime_error {
 public:
  explicit OracleCapExceeded(const std::string& what) : std::runtime_error(what) { }
};

namespace oracle_caps {
constexpr std::size_t kBruteForceVars = 25;
constexpr std::size_t kVertexEnumDim = 10;
constexpr std::size_t kVertexEnumRows = 24;
constexpr int kGraphOracleVertices = 12;
}  // namespace oracle_caps

// --- brute-force MAP --------------------------------------------------------

struct MapResult {
  enum class Status { Unique, Tied, Infeasible };
  Status status = Status::Infeasible;
  Assignment assignment;                // the unique optimum, or one of the tied
  Rat value = 0;                        // reporting sense
  std::vector<Assignment> tied;         // all ties, capped
  std::uint64_t tie_count = 0;
};

/// Exhaustive enumeration of {0,1}^n filtered by the factors, exact rational
/// objective. Weights are dyadic, so the objective is compared as a scaled
/// big integer.
inline MapResult brute_force_map(const FactorGraph& g, std::size_t tie_storage_cap = 4096) {
  if (g.num_vars > oracle_caps::kBruteForceVars)
    throw OracleCapExceeded("brute_force_map: num_vars > 25");

  // weights[i] = mant[i] * 2^scale exactly, with a common scale.
  std::vector<std::int64_t> mant(g.num_vars, 0);
  std::vector<int> exp2(g.num_vars, 0);
  int min_exp = 0;
  bool any = false;
  for (std::size_t i = 0; i < g.num_vars; ++i) {
    if (g.weights[i] == 0.0) continue;
    int e = 0;
    double m = std::frexp(g.weights[i], &e);
    mant[i] = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp2[i] = e - 53;
    min_exp = any ? std::min(min_exp, exp2[i]) : exp2[i];
    any = true;
  }
  std::vector<BigInt> scaled(g.num_vars, 0);
  for (std::size_t i = 0; i < g.num_vars; ++i)
    if (mant[i] != 0) scaled[i] = BigInt(mant[i]) << (exp2[i] - min_exp);

  MapResult res;
  BigInt best = 0;
  bool have = false;
  Assignment x(g.num_vars, 0);
  std::vector<std::uint8_t> local;

  const std::uint64_t total = std::uint64_t{1} << g.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < g.num_vars; ++i) x[i] = (mask >> i) & 1u;
    bool ok = true;
    for (const Factor& f : g.factors) {
      local.resize(f.scope.size());
      for (std::size_t p = 0; p < f.scope.size(); ++p) local[p] = x[f.scope[p]];
      if (!eval_factor(f, local)) { ok = false; break; }
    }
    if (!ok) continue;
    BigInt obj = 0;
    for (std::size_t i = 0; i < g.num_vars; ++i)
      if (x[i]) obj += scaled[i];
    if (!have || obj < best) {
      best = obj;
      have = true;
      res.assignment = x;
      res.tied.clear();
      res.tied.push_back(x);
      res.tie_count = 1;
    } else if (obj == best) {
      ++res.tie_count;
      if (res.tied.size() < tie_storage_cap) res.tied.push_back(x);
    }
  }

  if (!have) {
    res.status = MapResult::Status::Infeasible;
    return res;
  }
  Rat stored = Rat(best);
  if (min_exp >= 0)
    stored *= Rat(BigInt(1) << min_exp);
  else
    stored /= Rat(BigInt(1) << -min_exp);
  res.value = g.sense == Sense::Maximize ? -stored : stored;
  res.status = res.tie_count == 1 ? MapResult::Status::Unique : MapResult::Status::Tied;
  return res;
}

// --- exact vertex enumeration via square subsystems -------------------------

struct VertexSet {
  std::vector<std::vector<Rat>> vertices;   // sorted, deduplicated
  std::vector<std::size_t> optimal_subset;  // indices attaining the optimum
};

namespace detail {

/// Exact Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

inline bool is_box_lower(const PolyRow& r, std::size_t& var) {
  if (r.rel != Rel::Ge || r.rhs != 0) return false;
  std::size_t nz = 0;
  for (std::size_t j = 0; j < r.coeffs.size(); ++j)
    if (r.coeffs[j] != 0) { var = j; ++nz; if (r.coeffs[j] != 1) return false; }
  return nz == 1;
}

inline bool is_box_upper(const PolyRow& r, std::size_t& var) {
  if (r.rel != Rel::Ge || r.rhs != -1) return false;
  std::size_t nz = 0;
  for (std::size_t j = 0; j < r.coeffs.size(); ++j)
    if (r.coeffs[j] != 0) { var = j; ++nz; if (r.coeffs[j] != -1) return false; }
  return nz == 1;
}

}  // namespace detail

/// All vertices of the polytope: every size-n row subset with an invertible
/// square submatrix contributes its tight solution when it lies inside the
/// polytope. Box rows are handled as variable pins, which reduces each
/// subsystem to the selected general rows over the unpinned variables.
inline VertexSet enumerate_vertices(const PolytopeDescription& p) {
  if (p.dim > oracle_caps::kVertexEnumDim)
    throw OracleCapExceeded("enumerate_vertices: dim > 10");
  if (p.rows.size() > oracle_caps::kVertexEnumRows)
    throw OracleCapExceeded("enumerate_vertices: rows > 24");

  const std::size_t n = p.dim;
  std::vector<std::size_t> general;
  std::vector<bool> has_lower(n, false), has_upper(n, false);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    std::size_t var = 0;
    if (detail::is_box_lower(p.rows[r], var) && !has_lower[var]) {
      has_lower[var] = true;
    } else if (detail::is_box_upper(p.rows[r], var) && !has_upper[var]) {
      has_upper[var] = true;
    } else {
      general.push_back(r);
    }
  }

  std::set<std::vector<Rat>> found;
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = i;

  for (std::size_t k = 0; k <= std::min(n, general.size()); ++k) {
    detail::for_each_combination(general.size(), k, [&](const std::vector<std::size_t>& gsel) {
      const std::size_t pins = n - k;
      detail::for_each_combination(n, pins, [&](const std::vector<std::size_t>& psel) {
        std::vector<std::size_t> unpinned;
        {
          std::vector<bool> pinned_mask(n, false);
          for (auto i : psel) pinned_mask[i] = true;
          for (std::size_t i = 0; i < n; ++i)
            if (!pinned_mask[i]) unpinned.push_back(i);
        }
        for (std::uint32_t patt = 0; patt < (1u << pins); ++patt) {
          bool rows_exist = true;
          std::vector<Rat> point(n, Rat(0));
          for (std::size_t t = 0; t < pins; ++t) {
            const bool one = (patt >> t) & 1u;
            const std::size_t v = psel[t];
            if (one ? !has_upper[v] : !has_lower[v]) { rows_exist = false; break; }
            point[v] = one ? 1 : 0;
          }
          if (!rows_exist) continue;

          if (k > 0) {
            std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
            std::vector<Rat> b(k);
            for (std::size_t r = 0; r < k; ++r) {
              const PolyRow& row = p.rows[general[gsel[r]]];
              Rat rhs = row.rhs;
              for (std::size_t t = 0; t < pins; ++t)
                rhs -= Rat(row.coeffs[psel[t]]) * point[psel[t]];
              for (std::size_t c = 0; c < k; ++c) a[r][c] = row.coeffs[unpinned[c]];
              b[r] = rhs;
            }
            auto sol = detail::solve_square(std::move(a), std::move(b));
            if (!sol) continue;
            for (std::size_t c = 0; c < k; ++c) point[unpinned[c]] = (*sol)[c];
          }
          if (point_in_polytope(p, point)) found.insert(point);
        }
      });
    });
  }

  VertexSet vs;
  vs.vertices.assign(found.begin(), found.end());
  if (!vs.vertices.empty() && !p.objective.empty()) {
    std::optional<Rat> best;
    for (const auto& v : vs.vertices) {
      Rat val = rat_dot(p.objective, v);
      if (!best || (p.sense == Sense::Minimize ? val < *best : val > *best)) best = val;
    }
    for (std::size_t i = 0; i < vs.vertices.size(); ++i)
      if (rat_dot(p.objective, vs.vertices[i]) == *best) vs.optimal_subset.push_back(i);
  }
  return vs;
}

/// K = max over invertible size-n row subsets of ||A_xi^{-1} 1||_1, with the
/// polytope written in pure >= form (each equality contributes both signs).
/// Row normalization is deliberately skipped; K is a diagnostic.
inline Rat lemma1_constant(const PolytopeDescription& p) {
  if (p.dim > oracle_caps::kVertexEnumDim)
    throw OracleCapExceeded("lemma1_constant: dim > 10");
  if (p.rows.size() > oracle_caps::kVertexEnumRows)
    throw OracleCapExceeded("lemma1_constant: rows > 24");

  const std::size_t n = p.dim;
  struct GeRow { std::vector<int> coeffs; };
  std::vector<GeRow> ge;
  for (const auto& row : p.rows) {
    ge.push_back({row.coeffs});
    if (row.rel == Rel::Eq) {
      std::vector<int> nc(row.coeffs.size());
      for (std::size_t j = 0; j < nc.size(); ++j) nc[j] = -row.coeffs[j];
      ge.push_back({std::move(nc)});
    }
  }

  // Single-coordinate rows pin one variable each; two of them on the same
  // variable are linearly dependent, so at most one per variable is chosen.
  std::vector<std::vector<int>> pin_coeff(n);  // distinct nonzero coefficients per var
  std::vector<std::size_t> multi;
  for (std::size_t r = 0; r < ge.size(); ++r) {
    std::size_t nz = 0, var = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (ge[r].coeffs[j] != 0) { var = j; ++nz; }
    if (nz == 1) {
      auto& pc = pin_coeff[var];
      if (std::find(pc.begin(), pc.end(), ge[r].coeffs[var]) == pc.end())
        pc.push_back(ge[r].coeffs[var]);
    } else if (nz > 1) {
      multi.push_back(r);
    }
  }

  std::optional<Rat> best;
  auto consider = [&](const std::vector<Rat>& y) {
    Rat norm = 0;
    for (const auto& c : y) norm += c < 0 ? -c : c;
    if (!best || norm > *best) best = norm;
  };

  for (std::size_t k = 0; k <= std::min(n, multi.size()); ++k) {
    detail::for_each_combination(multi.size(), k, [&](const std::vector<std::size_t>& gsel) {
      const std::size_t pins = n - k;
      detail::for_each_combination(n, pins, [&](const std::vector<std::size_t>& psel) {
        std::vector<std::size_t> unpinned;
        {
          std::vector<bool> pinned_mask(n, false);
          for (auto i : psel) pinned_mask[i] = true;
          for (std::size_t i = 0; i < n; ++i)
            if (!pinned_mask[i]) unpinned.push_back(i);
        }
        // One choice of pin row per pinned variable.
        std::vector<std::size_t> choice(pins, 0);
        while (true) {
          bool valid = true;
          std::vector<Rat> y(n, Rat(0));
          for (std::size_t t = 0; t < pins; ++t) {
            const auto& pc = pin_coeff[psel[t]];
            if (choice[t] >= pc.size()) { valid = false; break; }
            y[psel[t]] = Rat(1, pc[choice[t]]);
          }
          if (valid) {
            bool ok = true;
            if (k > 0) {
              std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
              std::vector<Rat> b(k);
              for (std::size_t r = 0; r < k; ++r) {
                const auto& row = ge[multi[gsel[r]]];
                Rat rhs = 1;
                for (std::size_t t = 0; t < pins; ++t)
                  rhs -= Rat(row.coeffs[psel[t]]) * y[psel[t]];
                for (std::size_t c = 0; c < k; ++c) a[r][c] = row.coeffs[unpinned[c]];
                b[r] = rhs;
              }
              auto sol = detail::solve_square(std::move(a), std::move(b));
              if (sol)
                for (std::size_t c = 0; c < k; ++c) y[unpinned[c]] = (*sol)[c];
              else
                ok = false;
            }
            if (ok) consider(y);
          }
          // next per-variable row choice
          std::size_t t = 0;
          for (; t < pins; ++t) {
            if (choice[t] + 1 < pin_coeff[psel[t]].size()) { ++choice[t]; break; }
            choice[t] = 0;
          }
          if (t == pins || pins == 0) break;
        }
      });
    });
  }
  if (!best) throw OracleCapExceeded("lemma1_constant: no invertible subsystem");
  return *best;
}

// --- classical graph oracles ------------------------------------------------

struct Arc {
  int from = 0;
  int to = 0;
  Rat cost = 0;
};

struct PathResult {
  bool reachable = false;
  std::vector<std::size_t> arc_ids;  // lexicographically smallest optimal path
  Rat cost = 0;
  bool tied = false;  // more than one optimal simple path
};

/// Exact shortest path for nonnegative arc costs. Dijkstra gives the
/// distance; the reported path and the tie flag come from exhaustive simple-
/// path enumeration, which double-checks the distance at desk scale.
inline PathResult dijkstra(int num_nodes, const std::vector<Arc>& arcs, int s, int t) {
  std::vector<std::vector<std::size_t>> out(num_nodes);
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    if (arcs[e].cost < 0) throw std::invalid_argument("dijkstra: negative cost");
    out[arcs[e].from].push_back(e);
  }
  std::vector<std::optional<Rat>> dist(num_nodes);
  std::vector<bool> done(num_nodes, false);
  using QItem = std::pair<Rat, int>;
  auto cmp = [](const QItem& a, const QItem& b) { return a.first > b.first; };
  std::priority_queue<QItem, std::vector<QItem>, decltype(cmp)> pq(cmp);
  dist[s] = Rat(0);
  pq.push({Rat(0), s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = true;
    for (auto e : out[u]) {
      Rat nd = d + arcs[e].cost;
      int v = arcs[e].to;
      if (!dist[v] || nd < *dist[v]) { dist[v] = nd; pq.push({nd, v}); }
    }
  }

  PathResult res;
  if (!dist[t]) return res;
  res.reachable = true;
  res.cost = *dist[t];

  // Enumerate simple s-t paths; keep the lexicographically smallest optimum.
  std::vector<bool> visited(num_nodes, false);
  std::vector<std::size_t> cur;
  std::uint64_t optimal_count = 0;
  std::vector<std::size_t> best_path;
  Rat best_cost = 0;
  bool have = false;
  auto dfs = [&](auto&& self, int u, Rat acc) -> void {
    if (u == t) {
      if (!have || acc < best_cost) {
        have = true;
        best_cost = acc;
        best_path = cur;
        optimal_count = 1;
      } else if (acc == best_cost) {
        ++optimal_count;
        if (cur < best_path) best_path = cur;
      }
      return;
    }
    visited[u] = true;
    for (auto e : out[u]) {
      if (visited[arcs[e].to]) continue;
      cur.push_back(e);
      self(self, arcs[e].to, acc + arcs[e].cost);
      cur.pop_back();
    }
    visited[u] = false;
  };
  dfs(dfs, s, Rat(0));
  res.arc_ids = best_path;
  res.tied = optimal_count > 1;
  if (best_cost != res.cost) throw std::logic_error("dijkstra: internal distance mismatch");
  return res;
}

struct MatchingResult {
  bool exists = false;
  Rat value = 0;                                   // maximum total value
  std::vector<std::vector<std::size_t>> optimal;   // edge-id sets, all ties
};

/// Exhaustive maximum-weight perfect matching. `value` gives the worth of an
/// edge, so transformed objectives (noised copies, blossom weights) can be
/// scored exactly.
template <typename ValueFn>
MatchingResult matching_oracle(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                               ValueFn&& value) {
  if (num_vertices > oracle_caps::kGraphOracleVertices)
    throw OracleCapExceeded("matching_oracle: more than 12 vertices");
  std::vector<std::vector<std::size_t>> incident(num_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  MatchingResult res;
  std::vector<bool> used(num_vertices, false);
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, int v, Rat acc) -> void {
    while (v < num_vertices && used[v]) ++v;
    if (v == num_vertices) {
      if (!res.exists || acc > res.value) {
        res.exists = true;
        res.value = acc;
        res.optimal.clear();
        res.optimal.push_back(cur);
      } else if (acc == res.value) {
        res.optimal.push_back(cur);
      }
      return;
    }
    for (auto e : incident[v]) {
      int other = edges[e].first == v ? edges[e].second : edges[e].first;
      if (used[other]) continue;
      used[v] = used[other] = true;
      cur.push_back(e);
      self(self, v + 1, acc + value(e));
      cur.pop_back();
      used[v] = used[other] = false;
    }
  };
  rec(rec, 0, Rat(0));
  return res;
}

inline MatchingResult matching_oracle(int num_vertices,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<Rat>& weights) {
  return matching_oracle(num_vertices, edges, [&](std::size_t e) { return weights[e]; });
}

struct FlowArc {
  int from = 0;
  int to = 0;
  long long capacity = 0;
  Rat cost = 0;
};

struct FlowResult {
  bool feasible = false;
  std::vector<long long> flow;  // per arc
  Rat cost = 0;
};

/// Min-cost integral flow by successive shortest augmenting paths
/// (Bellman-Ford on the residual network, exact costs).
inline FlowResult flow_oracle(int num_nodes, const std::vector<FlowArc>& arcs,
                              const std::vector<long long>& demands) {
  if (num_nodes > oracle_caps::kGraphOracleVertices)
    throw OracleCapExceeded("flow_oracle: more than 12 nodes");
  long long total = 0;
  for (auto d : demands) total += d;
  if (total != 0) throw std::invalid_argument("flow_oracle: demands do not sum to zero");

  // Residual arcs: forward + backward twins, plus super source/sink.
  struct RArc { int to; long long cap; Rat cost; int twin; int orig; };
  const int S = num_nodes, T = num_nodes + 1;
  std::vector<std::vector<int>> head(num_nodes + 2);
  std::vector<RArc> r;
  auto add = [&](int u, int v, long long cap, Rat cost, int orig) {
    head[u].push_back(static_cast<int>(r.size()));
    r.push_back({v, cap, cost, static_cast<int>(r.size()) + 1, orig});
    head[v].push_back(static_cast<int>(r.size()));
    r.push_back({u, 0, -cost, static_cast<int>(r.size()) - 1, -1});
  };
  for (std::size_t e = 0; e < arcs.size(); ++e)
    add(arcs[e].from, arcs[e].to, arcs[e].capacity, arcs[e].cost, static_cast<int>(e));
  long long supply = 0;
  for (int v = 0; v < num_nodes; ++v) {
    if (demands[v] > 0) { add(S, v, demands[v], Rat(0), -1); supply += demands[v]; }
    if (demands[v] < 0) add(v, T, -demands[v], Rat(0), -1);
  }

  FlowResult res;
  res.flow.assign(arcs.size(), 0);
  long long sent = 0;
  while (sent < supply) {
    const int N = num_nodes + 2;
    std::vector<std::optional<Rat>> dist(N);
    std::vector<int> via(N, -1);
    dist[S] = Rat(0);
    for (int pass = 0; pass < N; ++pass) {
      bool changed = false;
      for (int u = 0; u < N; ++u) {
        if (!dist[u]) continue;
        for (int a : head[u]) {
          if (r[a].cap <= 0) continue;
          Rat nd = *dist[u] + r[a].cost;
          if (!dist[r[a].to] || nd < *dist[r[a].to]) {
            dist[r[a].to] = nd;
            via[r[a].to] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (!dist[T]) return res;  // feasible stays false: demand exceeds capacity
    long long push = supply - sent;
    for (int v = T; v != S; v = r[r[via[v]].twin].to) push = std::min(push, r[via[v]].cap);
    for (int v = T; v != S; v = r[r[via[v]].twin].to) {
      r[via[v]].cap -= push;
      r[r[via[v]].twin].cap += push;
      if (r[via[v]].orig >= 0) res.flow[r[via[v]].orig] += push;
      if (r[via[v]].orig < 0 && r[r[via[v]].twin].orig >= 0)
        res.flow[r[r[via[v]].twin].orig] -= push;
    }
    sent += push;
  }
  res.feasible = true;
  for (std::size_t e = 0; e < arcs.size(); ++e) res.cost += Rat(res.flow[e]) * arcs[e].cost;
  return res;
}

}  // namespace lpbp

#endif
