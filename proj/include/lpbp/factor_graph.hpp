#ifndef LPBP_FACTOR_GRAPH_HPP
#define LPBP_FACTOR_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpbp/extreal.hpp"

namespace lpbp {

using VarId = std::uint32_t;
using FactorId = std::uint32_t;
using Assignment = std::vector<std::uint8_t>;

enum class Sense { Minimize, Maximize };

/// One linear row over a factor's scope: coeffs * x (=|>=) rhs.
/// Coefficients are integers so feasibility checks are exact.
struct LinearRow {
  std::vector<int> coeffs;
  int rhs = 0;
};

enum class HintKind : std::uint8_t {
  Generic,
  DegreeEq,
  DegreeLe,
  DegreeGe,
  SignedConservation,
  OddCycleBlossom,
};

/// Fast-evaluator tag. `param` is d / b / demand / cycle length depending on
/// the kind; `signs` is the per-scope-position +-1 pattern for
/// SignedConservation. A non-Generic hint must be extensionally equal to the
/// factor's row system.
struct Hint {
  HintKind kind = HintKind::Generic;
  int param = 0;
  std::vector<std::int8_t> signs;
};

struct Factor {
  std::vector<VarId> scope;
  std::vector<LinearRow> eq_rows;
  std::vector<LinearRow> ineq_rows;  // coeffs * x >= rhs
  Hint hint;
};

class GraphError : public std::runtime_error {
 public:
  enum class Code {
    InfeasibleFactor,
    ScopeTooSmall,
    ScopeTooLarge,
    BadReference,
    DuplicateVarInScope,
    BadRow,
    HintMismatch,
  };

  GraphError(Code code, int factor_id, const std::string& what)
      : std::runtime_error(what), code_(code), factor_id_(factor_id) { }

  Code code() const { return code_; }
  int factor_id() const { return factor_id_; }

 private:
  Code code_;
  int factor_id_;
};

namespace detail {

constexpr std::size_t kGenericScopeCap = 25;   // 2^25 enumeration ceiling
constexpr std::size_t kHintVerifyCap = 20;     // exhaustive hint check bound

inline bool row_holds_eq(const LinearRow& row, std::span<const std::uint8_t> z) {
  long long s = 0;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) s += static_cast<long long>(row.coeffs[j]) * z[j];
  return s == row.rhs;
}

inline bool row_holds_ge(const LinearRow& row, std::span<const std::uint8_t> z) {
  long long s = 0;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) s += static_cast<long long>(row.coeffs[j]) * z[j];
  return s >= row.rhs;
}

/// Maximal cyclic runs of selected positions all have even length.
/// The all-selected case is a single odd circular run (scope size is odd).
inline bool blossom_runs_even(std::span<const std::uint8_t> z) {
  const std::size_t k = z.size();
  std::size_t first_zero = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (!z[i]) { first_zero = i; break; }
  }
  if (first_zero == k) return false;
  std::size_t run = 0;
  for (std::size_t step = 1; step <= k; ++step) {
    std::size_t i = (first_zero + step) % k;
    if (z[i]) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

inline bool hint_eval(const Hint& h, std::span<const std::uint8_t> z) {
  long long s = 0;
  switch (h.kind) {
    case HintKind::Generic:
      return true;  // caller must use rows
    case HintKind::DegreeEq:
      for (auto b : z) s += b;
      return s == h.param;
    case HintKind::DegreeLe:
      for (auto b : z) s += b;
      return s <= h.param;
    case HintKind::DegreeGe:
      for (auto b : z) s += b;
      return s >= h.param;
    case HintKind::SignedConservation:
      for (std::size_t j = 0; j < z.size(); ++j) s += h.signs[j] * static_cast<long long>(z[j]);
      return s == h.param;
    case HintKind::OddCycleBlossom: {
      long long total = 0;
      for (auto b : z) total += b;
      return total <= h.param - 1 && blossom_runs_even(z);
    }
  }
  return false;
}

}  // namespace detail

inline bool eval_factor(const Factor& f, std::span<const std::uint8_t> local) {
  if (local.size() != f.scope.size())
    throw std::invalid_argument("eval_factor: assignment length != scope size");
  for (const auto& r : f.eq_rows)
    if (!detail::row_holds_eq(r, local)) return false;
  for (const auto& r : f.ineq_rows)
    if (!detail::row_holds_ge(r, local)) return false;
  return true;
}

struct FactorGraph {
  std::size_t num_vars = 0;
  Sense sense = Sense::Minimize;
  std::vector<double> weights;  // stored in minimize sense
  std::vector<Factor> factors;
  std::vector<std::vector<FactorId>> adjacency;  // F_i, ordered

  // Directed-pair slot layout for message storage: pair (i, adjacency[i][s])
  // lives at pair_offset[i] + s.
  std::vector<std::size_t> pair_offset;
  // Per factor, per scope position: the slot of (scope var -> this factor).
  std::vector<std::vector<std::size_t>> scope_slots;
  // Inverse of scope_slots: per slot, the factor and the scope position.
  std::vector<FactorId> slot_factor;
  std::vector<std::uint32_t> slot_pos;

  std::size_t num_pairs() const { return pair_offset.empty() ? 0 : pair_offset.back(); }

  double reporting_objective(double stored_objective) const {
    return sense == Sense::Maximize ? -stored_objective : stored_objective;
  }
};

namespace detail {

inline bool hint_feasible_exists(const Factor& f) {
  const auto k = static_cast<long long>(f.scope.size());
  switch (f.hint.kind) {
    case HintKind::Generic:
      return false;  // no shortcut
    case HintKind::DegreeEq:
      return f.hint.param >= 0 && f.hint.param <= k;
    case HintKind::DegreeLe:
      return f.hint.param >= 0;
    case HintKind::DegreeGe:
      return f.hint.param <= k;
    case HintKind::SignedConservation: {
      long long pos = 0, neg = 0;
      for (auto s : f.hint.signs) (s > 0 ? pos : neg) += 1;
      return f.hint.param >= -neg && f.hint.param <= pos;
    }
    case HintKind::OddCycleBlossom:
      return true;  // the empty selection is feasible
  }
  return false;
}

}  // namespace detail

/// Builds the GM. `weights` are given in the reporting sense; maximization
/// problems are stored negated so the engine has a single minimize path.
/// Each factor must admit at least one feasible local assignment; global
/// feasibility is deliberately not checked here.
inline FactorGraph build_graph(std::size_t num_vars, std::vector<double> weights, Sense sense,
                               std::vector<Factor> factors, bool verify_hints = true) {
  if (weights.size() != num_vars)
    throw std::invalid_argument("build_graph: weights size != num_vars");

  FactorGraph g;
  g.num_vars = num_vars;
  g.sense = sense;
  g.weights = std::move(weights);
  if (sense == Sense::Maximize)
    for (auto& w : g.weights) w = -w;

  for (std::size_t fid = 0; fid < factors.size(); ++fid) {
    Factor& f = factors[fid];
    const std::size_t k = f.scope.size();
    if (k < 2)
      throw GraphError(GraphError::Code::ScopeTooSmall, static_cast<int>(fid),
                       "factor " + std::to_string(fid) + ": scope size " + std::to_string(k) + " < 2");
    if (f.hint.kind == HintKind::Generic && k > detail::kGenericScopeCap)
      throw GraphError(GraphError::Code::ScopeTooLarge, static_cast<int>(fid),
                       "factor " + std::to_string(fid) + ": generic scope exceeds cap");
    std::vector<VarId> sorted = f.scope;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GraphError(GraphError::Code::DuplicateVarInScope, static_cast<int>(fid),
                       "factor " + std::to_string(fid) + ": duplicate variable in scope");
    for (VarId v : f.scope)
      if (v >= num_vars)
        throw GraphError(GraphError::Code::BadReference, static_cast<int>(fid),
                         "factor " + std::to_string(fid) + ": variable out of range");
    for (const auto& r : f.eq_rows)
      if (r.coeffs.size() != k)
        throw GraphError(GraphError::Code::BadRow, static_cast<int>(fid), "eq row width != scope");
    for (const auto& r : f.ineq_rows)
      if (r.coeffs.size() != k)
        throw GraphError(GraphError::Code::BadRow, static_cast<int>(fid), "ineq row width != scope");
    if (f.hint.kind == HintKind::SignedConservation && f.hint.signs.size() != k)
      throw GraphError(GraphError::Code::BadRow, static_cast<int>(fid), "sign pattern width != scope");
    if (f.hint.kind == HintKind::OddCycleBlossom &&
        (static_cast<std::size_t>(f.hint.param) != k || k % 2 == 0 || k < 3))
      throw GraphError(GraphError::Code::BadRow, static_cast<int>(fid), "blossom hint/scope mismatch");

    if (k <= detail::kHintVerifyCap) {
      bool any_feasible = false;
      std::vector<std::uint8_t> z(k, 0);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        for (std::size_t j = 0; j < k; ++j) z[j] = (mask >> j) & 1u;
        const bool rows_ok = eval_factor(f, z);
        any_feasible = any_feasible || rows_ok;
        if (verify_hints && f.hint.kind != HintKind::Generic &&
            rows_ok != detail::hint_eval(f.hint, z))
          throw GraphError(GraphError::Code::HintMismatch, static_cast<int>(fid),
                           "factor " + std::to_string(fid) + ": hint disagrees with rows");
        if (any_feasible && !(verify_hints && f.hint.kind != HintKind::Generic)) break;
      }
      if (!any_feasible)
        throw GraphError(GraphError::Code::InfeasibleFactor, static_cast<int>(fid),
                         "factor " + std::to_string(fid) + ": no feasible local assignment");
    } else if (f.hint.kind != HintKind::Generic) {
      if (!detail::hint_feasible_exists(f))
        throw GraphError(GraphError::Code::InfeasibleFactor, static_cast<int>(fid),
                         "factor " + std::to_string(fid) + ": hint proves no feasible assignment");
    } else {
      // Hintless factor beyond the exhaustive-verify bound: scan with early exit.
      bool any_feasible = false;
      std::vector<std::uint8_t> z(k, 0);
      for (std::uint64_t mask = 0; mask < (1ull << k) && !any_feasible; ++mask) {
        for (std::size_t j = 0; j < k; ++j) z[j] = (mask >> j) & 1u;
        any_feasible = eval_factor(f, z);
      }
      if (!any_feasible)
        throw GraphError(GraphError::Code::InfeasibleFactor, static_cast<int>(fid),
                         "factor " + std::to_string(fid) + ": no feasible local assignment");
    }
  }

  g.factors = std::move(factors);
  g.adjacency.assign(num_vars, {});
  for (FactorId fid = 0; fid < g.factors.size(); ++fid)
    for (VarId v : g.factors[fid].scope) g.adjacency[v].push_back(fid);

  g.pair_offset.assign(num_vars + 1, 0);
  for (std::size_t i = 0; i < num_vars; ++i)
    g.pair_offset[i + 1] = g.pair_offset[i] + g.adjacency[i].size();

  g.scope_slots.assign(g.factors.size(), {});
  g.slot_factor.resize(g.num_pairs());
  g.slot_pos.resize(g.num_pairs());
  for (FactorId fid = 0; fid < g.factors.size(); ++fid) {
    const Factor& f = g.factors[fid];
    auto& slots = g.scope_slots[fid];
    slots.resize(f.scope.size());
    for (std::size_t p = 0; p < f.scope.size(); ++p) {
      VarId v = f.scope[p];
      const auto& adj = g.adjacency[v];
      auto it = std::find(adj.begin(), adj.end(), fid);
      slots[p] = g.pair_offset[v] + static_cast<std::size_t>(it - adj.begin());
      g.slot_factor[slots[p]] = fid;
      g.slot_pos[slots[p]] = static_cast<std::uint32_t>(p);
    }
  }
  return g;
}

struct GlobalEval {
  bool feasible = false;
  double objective = 0.0;     // reporting sense
  FactorId violated = 0;      // first violated factor when infeasible
};

inline GlobalEval eval_global(const FactorGraph& g, const Assignment& x) {
  if (x.size() != g.num_vars)
    throw std::invalid_argument("eval_global: assignment length != num_vars");
  std::vector<std::uint8_t> local;
  for (FactorId fid = 0; fid < g.factors.size(); ++fid) {
    const Factor& f = g.factors[fid];
    local.resize(f.scope.size());
    for (std::size_t p = 0; p < f.scope.size(); ++p) local[p] = x[f.scope[p]];
    if (!eval_factor(f, local)) return {false, 0.0, fid};
  }
  double obj = 0.0;
  for (std::size_t i = 0; i < g.num_vars; ++i)
    if (x[i]) obj += g.weights[i];
  return {true, g.reporting_objective(obj), 0};
}

// --- factor max-marginals -------------------------------------------------
//
// max over feasible z_alpha with z_pin = c of sum_{j != pin, z_j = 1} lambda_j.
// Returns -inf when no feasible completion exists. Both the generic and the
// specialized routes determine the winning set first and then re-sum it in
// scope order, so equal selections are bitwise identical across routes.

namespace detail {

inline ExtReal sum_selected(std::span<const ExtReal> lambda, std::span<const std::uint8_t> z,
                            std::size_t pin) {
  bool saw_pos = false;
  double acc = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == pin || !z[j]) continue;
    if (lambda[j].is_neg_inf()) return ExtReal::neg_inf();
    if (lambda[j].is_pos_inf()) { saw_pos = true; continue; }
    acc += lambda[j].v;
  }
  return saw_pos ? ExtReal::pos_inf() : ExtReal(acc);
}

/// Indices of free positions ordered by (lambda desc, index asc).
inline std::vector<std::size_t> sorted_free(std::span<const ExtReal> lambda, std::size_t pin) {
  std::vector<std::size_t> idx;
  idx.reserve(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (j != pin) idx.push_back(j);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (lambda[a].v != lambda[b].v) return lambda[a].v > lambda[b].v;
    return a < b;
  });
  return idx;
}

inline ExtReal finish(std::span<const ExtReal> lambda, std::size_t k, std::size_t pin,
                      const std::vector<std::size_t>& chosen) {
  std::vector<std::uint8_t> z(k, 0);
  for (auto j : chosen) z[j] = 1;
  return sum_selected(lambda, z, pin);
}

inline ExtReal mm_degree_eq(const Factor& f, std::size_t pin, int c,
                            std::span<const ExtReal> lambda) {
  const auto k = f.scope.size();
  const int need = f.hint.param - c;
  if (need < 0 || static_cast<std::size_t>(need) > k - 1) return ExtReal::neg_inf();
  auto order = sorted_free(lambda, pin);
  std::vector<std::size_t> chosen(order.begin(), order.begin() + need);
  return finish(lambda, k, pin, chosen);
}

inline ExtReal mm_degree_le(const Factor& f, std::size_t pin, int c,
                            std::span<const ExtReal> lambda) {
  const auto k = f.scope.size();
  const int cap = f.hint.param - c;
  if (cap < 0) return ExtReal::neg_inf();
  auto order = sorted_free(lambda, pin);
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < order.size() && r < static_cast<std::size_t>(cap); ++r) {
    if (!(lambda[order[r]] > ExtReal(0.0))) break;
    chosen.push_back(order[r]);
  }
  return finish(lambda, k, pin, chosen);
}

inline ExtReal mm_degree_ge(const Factor& f, std::size_t pin, int c,
                            std::span<const ExtReal> lambda) {
  const auto k = f.scope.size();
  const int req = std::max(0, f.hint.param - c);
  if (static_cast<std::size_t>(req) > k - 1) return ExtReal::neg_inf();
  auto order = sorted_free(lambda, pin);
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (lambda[order[r]] > ExtReal(0.0) || r < static_cast<std::size_t>(req))
      chosen.push_back(order[r]);
    else
      break;
  }
  return finish(lambda, k, pin, chosen);
}

inline ExtReal mm_signed(const Factor& f, std::size_t pin, int c,
                         std::span<const ExtReal> lambda) {
  const auto k = f.scope.size();
  std::vector<std::size_t> pos, neg;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == pin) continue;
    (f.hint.signs[j] > 0 ? pos : neg).push_back(j);
  }
  auto by_lambda = [&](std::size_t a, std::size_t b) {
    if (lambda[a].v != lambda[b].v) return lambda[a].v > lambda[b].v;
    return a < b;
  };
  std::sort(pos.begin(), pos.end(), by_lambda);
  std::sort(neg.begin(), neg.end(), by_lambda);

  auto prefix = [&](const std::vector<std::size_t>& v) {
    std::vector<ExtReal> ps(v.size() + 1, ExtReal(0.0));
    for (std::size_t r = 0; r < v.size(); ++r) ps[r + 1] = ps[r] + lambda[v[r]];
    return ps;
  };
  const auto ps_pos = prefix(pos);
  const auto ps_neg = prefix(neg);

  // Take p positives and m negatives with p - m = demand - sign(pin)*c.
  const long long d = f.hint.param - static_cast<long long>(f.hint.signs[pin]) * c;
  long long lo = std::max<long long>(0, d);
  long long hi = std::min<long long>(static_cast<long long>(pos.size()),
                                     static_cast<long long>(neg.size()) + d);
  if (lo > hi) return ExtReal::neg_inf();

  long long best_p = -1;
  ExtReal best = ExtReal::neg_inf();
  bool have = false;
  for (long long p = lo; p <= hi; ++p) {
    ExtReal cand = ps_pos[static_cast<std::size_t>(p)] + ps_neg[static_cast<std::size_t>(p - d)];
    if (!have || cand > best) { best = cand; best_p = p; have = true; }
  }
  std::vector<std::size_t> chosen(pos.begin(), pos.begin() + best_p);
  chosen.insert(chosen.end(), neg.begin(), neg.begin() + (best_p - d));
  return finish(lambda, k, pin, chosen);
}

/// Feasible blossom selections are exactly the vertex sets whose maximal
/// cyclic runs all have even length. Fix an unselected breakpoint r and run a
/// linear DP over the remaining positions; state is the parity of the open
/// run (0 closed, 1 odd, 2 even).
inline ExtReal mm_blossom(const Factor& f, std::size_t pin, int c,
                          std::span<const ExtReal> lambda) {
  const std::size_t k = f.scope.size();
  ExtReal best = ExtReal::neg_inf();
  bool have = false;
  std::vector<std::size_t> best_set;

  std::vector<std::array<ExtReal, 3>> val(k);
  std::vector<std::array<std::int8_t, 3>> from(k);  // previous state, -1 unreachable

  for (std::size_t r = 0; r < k; ++r) {
    if (r == pin && c == 1) continue;
    for (auto& a : val) a = {ExtReal::neg_inf(), ExtReal::neg_inf(), ExtReal::neg_inf()};
    for (auto& a : from) a = {-1, -1, -1};

    auto relax = [&](std::size_t step, int state, ExtReal v, int prev) {
      if (from[step][state] < 0 || v > val[step][state]) {
        val[step][state] = v;
        from[step][state] = static_cast<std::int8_t>(prev);
      }
    };

    for (std::size_t step = 0; step < k - 1; ++step) {
      const std::size_t p = (r + 1 + step) % k;
      const bool may_skip = p != pin || c == 0;
      const bool may_take = p != pin || c == 1;
      const ExtReal gain = p == pin ? ExtReal(0.0) : lambda[p];
      if (step == 0) {
        if (may_skip) relax(step, 0, ExtReal(0.0), 0);
        if (may_take) relax(step, 1, gain, 0);
        continue;
      }
      for (int s = 0; s < 3; ++s) {
        if (from[step - 1][s] < 0) continue;
        const ExtReal base = val[step - 1][s];
        if (may_skip && (s == 0 || s == 2)) relax(step, 0, base, s);
        if (may_take) relax(step, s == 1 ? 2 : 1, base + gain, s);
      }
    }

    for (int end : {0, 2}) {
      if (from[k - 2][end] < 0) continue;
      const ExtReal cand = val[k - 2][end];
      if (have && !(cand > best)) continue;
      best = cand;
      have = true;
      best_set.clear();
      int s = end;
      for (std::size_t step = k - 1; step-- > 0;) {
        const std::size_t p = (r + 1 + step) % k;
        if (s == 1 || s == 2) best_set.push_back(p);
        s = from[step][s];
      }
    }
  }
  if (!have) return ExtReal::neg_inf();
  return finish(lambda, k, pin, best_set);
}

}  // namespace detail

/// Exhaustive route: enumerate all completions, test the rows.
inline ExtReal max_marginal_generic(const Factor& f, std::size_t pin, int c,
                                    std::span<const ExtReal> lambda) {
  const std::size_t k = f.scope.size();
  if (k > detail::kGenericScopeCap)
    throw GraphError(GraphError::Code::ScopeTooLarge, -1, "max_marginal_generic: scope exceeds cap");
  std::vector<std::uint8_t> z(k, 0);
  ExtReal best = ExtReal::neg_inf();
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (((mask >> pin) & 1u) != static_cast<std::uint32_t>(c)) continue;
    for (std::size_t j = 0; j < k; ++j) z[j] = (mask >> j) & 1u;
    if (!eval_factor(f, z)) continue;
    ExtReal v = detail::sum_selected(lambda, z, pin);
    if (!have || v > best) { best = v; have = true; }
  }
  return have ? best : ExtReal::neg_inf();
}

/// Dispatching route, used by the engine. -inf is a value, not an error.
inline ExtReal factor_max_marginal(const Factor& f, std::size_t pin, int c,
                                   std::span<const ExtReal> lambda) {
  switch (f.hint.kind) {
    case HintKind::Generic:           return max_marginal_generic(f, pin, c, lambda);
    case HintKind::DegreeEq:          return detail::mm_degree_eq(f, pin, c, lambda);
    case HintKind::DegreeLe:          return detail::mm_degree_le(f, pin, c, lambda);
    case HintKind::DegreeGe:          return detail::mm_degree_ge(f, pin, c, lambda);
    case HintKind::SignedConservation:return detail::mm_signed(f, pin, c, lambda);
    case HintKind::OddCycleBlossom:   return detail::mm_blossom(f, pin, c, lambda);
  }
  return ExtReal::neg_inf();
}

// --- factor construction helpers -------------------------------------------

inline Factor make_degree_eq(std::vector<VarId> scope, int d) {
  Factor f;
  f.scope = std::move(scope);
  f.eq_rows.push_back({std::vector<int>(f.scope.size(), 1), d});
  f.hint = {HintKind::DegreeEq, d, {}};
  return f;
}

inline Factor make_degree_le(std::vector<VarId> scope, int b) {
  Factor f;
  f.scope = std::move(scope);
  f.ineq_rows.push_back({std::vector<int>(f.scope.size(), -1), -b});
  f.hint = {HintKind::DegreeLe, b, {}};
  return f;
}

inline Factor make_degree_ge(std::vector<VarId> scope, int b) {
  Factor f;
  f.scope = std::move(scope);
  f.ineq_rows.push_back({std::vector<int>(f.scope.size(), 1), b});
  f.hint = {HintKind::DegreeGe, b, {}};
  return f;
}

inline Factor make_signed_conservation(std::vector<VarId> scope, std::vector<std::int8_t> signs,
                                       int demand) {
  Factor f;
  f.scope = std::move(scope);
  std::vector<int> coeffs(signs.begin(), signs.end());
  f.eq_rows.push_back({coeffs, demand});
  f.hint = {HintKind::SignedConservation, demand, std::move(signs)};
  return f;
}

/// Cyclic distance between vertex position i and edge (j, j+1 mod k).
inline int cycle_vertex_edge_distance(int i, int j, int k) {
  auto cyc = [k](int a, int b) {
    int d = std::abs(a - b);
    return std::min(d, k - d);
  };
  return std::min(cyc(i, j), cyc(i, (j + 1) % k));
}

/// Blossom factor over the cycle vertices in cyclic order. Per cycle edge the
/// signed sum must lie in {0,2} (encoded as the interval rows 0 <= s <= 2,
/// equivalent over binary assignments together with the budget row), plus the
/// budget row sum <= k-1.
inline Factor make_odd_cycle_blossom(std::vector<VarId> scope) {
  Factor f;
  const int k = static_cast<int>(scope.size());
  f.scope = std::move(scope);
  for (int j = 0; j < k; ++j) {
    std::vector<int> coeffs(k);
    for (int i = 0; i < k; ++i)
      coeffs[i] = cycle_vertex_edge_distance(i, j, k) % 2 == 0 ? 1 : -1;
    f.ineq_rows.push_back({coeffs, 0});
    std::vector<int> negated(k);
    for (int i = 0; i < k; ++i) negated[i] = -coeffs[i];
    f.ineq_rows.push_back({negated, -2});
  }
  f.ineq_rows.push_back({std::vector<int>(k, -1), -(k - 1)});
  f.hint = {HintKind::OddCycleBlossom, k, {}};
  return f;
}

}  // namespace lpbp

#endif
