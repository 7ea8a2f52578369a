#ifndef LPBP_INSTANCE_HPP
#define LPBP_INSTANCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbp {

enum class ProblemKind : std::uint8_t {
  ShortestPath,
  PerfectMatching,
  PerfectMatchingOddCycles,
  VertexCoverDual,
  EdgeCover,
  Tsp2Factor,
  CyclePacking,
  NetworkFlow,
};

inline const char* kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::ShortestPath: return "shortest_path";
    case ProblemKind::PerfectMatching: return "perfect_matching";
    case ProblemKind::PerfectMatchingOddCycles: return "perfect_matching_odd_cycles";
    case ProblemKind::VertexCoverDual: return "vertex_cover_dual";
    case ProblemKind::EdgeCover: return "edge_cover";
    case ProblemKind::Tsp2Factor: return "tsp_2factor";
    case ProblemKind::CyclePacking: return "cycle_packing";
    case ProblemKind::NetworkFlow: return "network_flow";
  }
  return "?";
}

inline bool kind_from_name(const std::string& s, ProblemKind& out) {
  for (int k = 0; k <= static_cast<int>(ProblemKind::NetworkFlow); ++k) {
    if (s == kind_name(static_cast<ProblemKind>(k))) {
      out = static_cast<ProblemKind>(k);
      return true;
    }
  }
  return false;
}

struct EdgeSpec {
  int u = 0;
  int v = 0;
  double weight = 0.0;
  bool directed = false;
};

class BadInstance : public std::runtime_error {
 public:
  enum class Code {
    Malformed,
    DegenerateVertex,
    IsolatedVertex,
    NonDisjointCycles,
    EvenCycle,
    CycleEdgeMissing,
    VertexDegreeTooSmall,
    UnbalancedDemand,
  };

  explicit BadInstance(const std::string& what, Code code = Code::Malformed)
      : std::runtime_error(what), code_(code) { }

  Code code() const { return code_; }

 private:
  Code code_;
};

/// A weighted (di)graph plus kind-specific parameters; the common source of
/// all GM constructions.
struct ProblemInstance {
  ProblemKind kind = ProblemKind::ShortestPath;
  int num_nodes = 0;
  std::vector<EdgeSpec> edges;

  int source = -1;                          // ShortestPath
  int sink = -1;                            // ShortestPath
  std::vector<std::vector<int>> odd_cycles; // PerfectMatchingOddCycles, vertex lists
  std::vector<int> budgets;                 // VertexCoverDual, per vertex
  std::vector<long long> demands;           // NetworkFlow, per vertex
  std::vector<long long> capacities;        // NetworkFlow, per edge
};

inline void validate_instance(const ProblemInstance& ins) {
  if (ins.num_nodes < 0) throw BadInstance("negative node count");
  for (const auto& e : ins.edges) {
    if (e.u < 0 || e.u >= ins.num_nodes || e.v < 0 || e.v >= ins.num_nodes)
      throw BadInstance("edge endpoint out of range");
    if (e.u == e.v) throw BadInstance("self-loops are not supported");
  }
  const bool wants_directed = ins.kind == ProblemKind::ShortestPath ||
                              ins.kind == ProblemKind::NetworkFlow;
  for (const auto& e : ins.edges)
    if (e.directed != wants_directed)
      throw BadInstance(std::string("edges must be ") + (wants_directed ? "directed" : "undirected") +
                        " for " + kind_name(ins.kind));

  switch (ins.kind) {
    case ProblemKind::ShortestPath:
      if (ins.source < 0 || ins.source >= ins.num_nodes || ins.sink < 0 ||
          ins.sink >= ins.num_nodes || ins.source == ins.sink)
        throw BadInstance("shortest path needs distinct source and sink in range");
      for (const auto& e : ins.edges)
        if (e.weight < 0) throw BadInstance("shortest path needs nonnegative weights");
      break;
    case ProblemKind::PerfectMatching:
    case ProblemKind::EdgeCover:
    case ProblemKind::Tsp2Factor:
    case ProblemKind::CyclePacking:
      for (const auto& e : ins.edges)
        if (e.weight < 0) throw BadInstance("weights must be nonnegative");
      break;
    case ProblemKind::PerfectMatchingOddCycles: {
      std::vector<bool> seen(ins.num_nodes, false);
      for (const auto& cyc : ins.odd_cycles) {
        if (cyc.size() < 3 || cyc.size() % 2 == 0)
          throw BadInstance("odd cycles must have odd length >= 3", BadInstance::Code::EvenCycle);
        for (int v : cyc) {
          if (v < 0 || v >= ins.num_nodes) throw BadInstance("cycle vertex out of range");
          if (seen[v])
            throw BadInstance("odd cycles must be vertex-disjoint",
                              BadInstance::Code::NonDisjointCycles);
          seen[v] = true;
        }
      }
      break;
    }
    case ProblemKind::VertexCoverDual:
      if (static_cast<int>(ins.budgets.size()) != ins.num_nodes)
        throw BadInstance("vertex cover dual needs one budget per vertex");
      for (int b : ins.budgets)
        if (b < 0) throw BadInstance("budgets must be nonnegative");
      break;
    case ProblemKind::NetworkFlow: {
      if (static_cast<int>(ins.demands.size()) != ins.num_nodes)
        throw BadInstance("network flow needs one demand per vertex");
      if (ins.capacities.size() != ins.edges.size())
        throw BadInstance("network flow needs one capacity per edge");
      for (auto c : ins.capacities)
        if (c < 1) throw BadInstance("capacities must be >= 1");
      long long total = 0;
      for (auto d : ins.demands) total += d;
      if (total != 0)
        throw BadInstance("demands must sum to zero", BadInstance::Code::UnbalancedDemand);
      for (const auto& e : ins.edges)
        if (e.weight < 0) throw BadInstance("network flow needs nonnegative costs");
      break;
    }
  }
}

}  // namespace lpbp

#endif
