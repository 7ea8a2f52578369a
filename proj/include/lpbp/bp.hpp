#ifndef LPBP_BP_HPP
#define LPBP_BP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lpbp/extreal.hpp"
#include "lpbp/factor_graph.hpp"

namespace lpbp {

// Synchronous max-product BP in log domain. The state holds one log-ratio
// lambda_{i->alpha} = log m(1) - log m(0) per directed (variable, factor)
// pair, laid out in the graph's pair-slot order.

struct MessageState {
  std::vector<ExtReal> lambda;
  std::uint64_t iteration = 0;
};

enum class InitKind : std::uint8_t { Uniform, RandomSeeded };

struct InitSpec {
  InitKind kind = InitKind::Uniform;
  std::uint64_t seed = 0;
  double range = 0.0;
};

struct BPConfig {
  std::uint64_t max_iters = 1000;
  double residual_tol = 1e-9;
  double tie_tol = 1e-9;
  std::uint64_t stable_window = 5;
  InitSpec init;
};

enum class Tri : std::uint8_t { Zero = 0, One = 1, Unknown = 2 };

struct Decision {
  std::vector<Tri> values;

  friend bool operator==(const Decision& a, const Decision& b) { return a.values == b.values; }

  bool decided() const {
    for (auto t : values)
      if (t == Tri::Unknown) return false;
    return true;
  }

  Assignment to_assignment() const {
    Assignment x(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) x[i] = values[i] == Tri::One ? 1 : 0;
    return x;
  }
};

struct BeliefVector {
  std::vector<ExtReal> delta;  // log b[1] - log b[0]
};

struct BPResult {
  Decision decision;
  std::uint64_t iterations_run = 0;
  bool converged = false;
  double final_residual = 0.0;
  std::optional<std::vector<BeliefVector>> belief_trace;
};

/// Deterministic uniform draw in [0, 1) from a mt19937_64 word.
inline double unit_from_word(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

inline MessageState init_messages(const FactorGraph& g, const InitSpec& init) {
  MessageState s;
  s.lambda.assign(g.num_pairs(), ExtReal(0.0));
  if (init.kind == InitKind::RandomSeeded && init.range != 0.0) {
    std::mt19937_64 rng(init.seed);
    for (auto& l : s.lambda) l = ExtReal(-init.range + 2.0 * init.range * unit_from_word(rng()));
  }
  return s;
}

namespace detail {

/// Factor-to-variable belief differences d_s = M(1) - M(0), one per slot,
/// computed purely from the given state.
inline std::vector<ExtReal> message_diffs(const FactorGraph& g, const MessageState& s) {
  std::vector<ExtReal> d(g.num_pairs(), ExtReal(0.0));
  std::vector<ExtReal> local;
  for (FactorId fid = 0; fid < g.factors.size(); ++fid) {
    const Factor& f = g.factors[fid];
    const auto& slots = g.scope_slots[fid];
    local.resize(f.scope.size());
    for (std::size_t p = 0; p < f.scope.size(); ++p) local[p] = s.lambda[slots[p]];
    for (std::size_t p = 0; p < f.scope.size(); ++p) {
      const ExtReal m1 = factor_max_marginal(f, p, 1, local);
      const ExtReal m0 = factor_max_marginal(f, p, 0, local);
      d[slots[p]] = ext_diff(m1, m0);
    }
  }
  return d;
}

/// New message for one slot: lambda'_{i->alpha} = -w_i + sum over the other
/// factors of i of their belief differences, in adjacency order.
inline ExtReal combine_pair(const FactorGraph& g, const std::vector<ExtReal>& d, VarId i,
                            std::size_t slot) {
  ExtReal acc(-g.weights[i]);
  for (std::size_t s2 = g.pair_offset[i]; s2 < g.pair_offset[i + 1]; ++s2) {
    if (s2 == slot) continue;
    acc += d[s2];
  }
  return acc;
}

inline BeliefVector combine_beliefs(const FactorGraph& g, const std::vector<ExtReal>& d) {
  BeliefVector b;
  b.delta.resize(g.num_vars);
  for (VarId i = 0; i < g.num_vars; ++i) {
    ExtReal acc(-g.weights[i]);
    for (std::size_t slot = g.pair_offset[i]; slot < g.pair_offset[i + 1]; ++slot) acc += d[slot];
    b.delta[i] = acc;
  }
  return b;
}

}  // namespace detail

/// One synchronous update of a single directed pair, from the old state only.
/// bp_step is exactly this map applied to every slot; the function is pure,
/// so any evaluation schedule yields the same new state.
inline ExtReal bp_step_pair(const FactorGraph& g, const MessageState& s, std::size_t slot) {
  const auto d = detail::message_diffs(g, s);
  VarId i = 0;
  while (g.pair_offset[i + 1] <= slot) ++i;
  return detail::combine_pair(g, d, i, slot);
}

inline std::pair<MessageState, double> bp_step(const FactorGraph& g, const MessageState& s) {
  const auto d = detail::message_diffs(g, s);
  MessageState next;
  next.lambda.resize(g.num_pairs());
  next.iteration = s.iteration + 1;
  double residual = 0.0;
  for (VarId i = 0; i < g.num_vars; ++i) {
    for (std::size_t slot = g.pair_offset[i]; slot < g.pair_offset[i + 1]; ++slot) {
      next.lambda[slot] = detail::combine_pair(g, d, i, slot);
      residual = std::max(residual, ext_dist(next.lambda[slot], s.lambda[slot]));
    }
  }
  return {std::move(next), residual};
}

inline BeliefVector beliefs(const FactorGraph& g, const MessageState& s) {
  return detail::combine_beliefs(g, detail::message_diffs(g, s));
}

inline Decision decode(const BeliefVector& b, double tie_tol) {
  Decision dec;
  dec.values.resize(b.delta.size());
  for (std::size_t i = 0; i < b.delta.size(); ++i) {
    if (b.delta[i].v > tie_tol)
      dec.values[i] = Tri::One;
    else if (b.delta[i].v < -tie_tol)
      dec.values[i] = Tri::Zero;
    else
      dec.values[i] = Tri::Unknown;
  }
  return dec;
}

/// Iterates until the residual drops under residual_tol and the decoded
/// assignment has been stable for stable_window consecutive iterations, or
/// max_iters. If the cap is reached while the decode is window-stable (the
/// messages may oscillate without moving the decision), the run still counts
/// as converged and the residual is reported as observed.
inline BPResult run(const FactorGraph& g, const BPConfig& cfg, bool record_trace = false) {
  if (cfg.max_iters < 1) throw std::invalid_argument("run: max_iters must be >= 1");
  if (cfg.stable_window < 1) throw std::invalid_argument("run: stable_window must be >= 1");

  BPResult res;
  if (record_trace) res.belief_trace.emplace();

  if (g.num_pairs() == 0) {
    res.decision = decode(beliefs(g, MessageState{}), cfg.tie_tol);
    res.converged = true;
    return res;
  }

  MessageState state = init_messages(g, cfg.init);
  auto diffs = detail::message_diffs(g, state);
  Decision prev;
  std::uint64_t stable = 0;
  double residual = 0.0;

  for (std::uint64_t t = 1; t <= cfg.max_iters; ++t) {
    MessageState next;
    next.lambda.resize(g.num_pairs());
    next.iteration = state.iteration + 1;
    residual = 0.0;
    for (VarId i = 0; i < g.num_vars; ++i)
      for (std::size_t slot = g.pair_offset[i]; slot < g.pair_offset[i + 1]; ++slot) {
        next.lambda[slot] = detail::combine_pair(g, diffs, i, slot);
        residual = std::max(residual, ext_dist(next.lambda[slot], state.lambda[slot]));
      }
    state = std::move(next);
    diffs = detail::message_diffs(g, state);

    Decision dec = decode(detail::combine_beliefs(g, diffs), cfg.tie_tol);
    if (record_trace) res.belief_trace->push_back(detail::combine_beliefs(g, diffs));
    stable = (t > 1 && dec == prev) ? stable + 1 : 1;
    prev = std::move(dec);

    res.iterations_run = t;
    res.final_residual = residual;
    if (residual < cfg.residual_tol && stable >= cfg.stable_window) {
      res.converged = true;
      break;
    }
    if (t == cfg.max_iters) res.converged = stable >= cfg.stable_window;
  }
  res.decision = std::move(prev);
  return res;
}

}  // namespace lpbp

#endif
