#ifndef LPBP_POLYTOPE_HPP
#define LPBP_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "lpbp/factor_graph.hpp"
#include "lpbp/rational.hpp"

namespace lpbp {

enum class Rel : std::uint8_t { Ge, Eq };

/// One inequality/equality over the full variable space, integer data.
struct PolyRow {
  std::vector<int> coeffs;
  Rel rel = Rel::Ge;
  int rhs = 0;
};

/// Row description of a polytope inside [0,1]^n together with a rational
/// objective. The box rows are part of `rows`.
struct PolytopeDescription {
  std::size_t dim = 0;
  std::vector<PolyRow> rows;
  std::vector<Rat> objective;
  Sense sense = Sense::Minimize;
};

inline PolytopeDescription make_polytope(std::size_t dim, std::vector<PolyRow> constraint_rows,
                                         std::vector<Rat> objective, Sense sense) {
  PolytopeDescription p;
  p.dim = dim;
  p.rows = std::move(constraint_rows);
  for (std::size_t i = 0; i < dim; ++i) {
    PolyRow lo;
    lo.coeffs.assign(dim, 0);
    lo.coeffs[i] = 1;
    lo.rel = Rel::Ge;
    lo.rhs = 0;
    p.rows.push_back(std::move(lo));
    PolyRow hi;
    hi.coeffs.assign(dim, 0);
    hi.coeffs[i] = -1;
    hi.rel = Rel::Ge;
    hi.rhs = -1;
    p.rows.push_back(std::move(hi));
  }
  p.objective = std::move(objective);
  p.sense = sense;
  return p;
}

inline bool point_in_polytope(const PolytopeDescription& p, const std::vector<Rat>& x) {
  for (const auto& row : p.rows) {
    Rat s = 0;
    for (std::size_t j = 0; j < p.dim; ++j)
      if (row.coeffs[j] != 0) s += Rat(row.coeffs[j]) * x[j];
    if (row.rel == Rel::Eq ? s != row.rhs : s < row.rhs) return false;
  }
  return true;
}

}  // namespace lpbp

#endif
