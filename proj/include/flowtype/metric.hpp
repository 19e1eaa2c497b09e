#pragma once

#include <vector>

#include "flowtype/rational.hpp"

namespace flowtype {

// Finite pseudo-metric space on points 0..k-1 with exact rational distances.
// Symmetry, zero diagonal, nonnegativity and the triangle inequality are
// checked exhaustively on construction.
class FiniteMetricSpace {
 public:
  explicit FiniteMetricSpace(std::vector<std::vector<Rat>> rho);

  int size() const { return static_cast<int>(rho_.size()); }
  const Rat& rho(int x, int y) const { return rho_[x][y]; }

 private:
  std::vector<std::vector<Rat>> rho_;
};

// Given f with |f(x)-f(y)| <= rho(x,y) + delta (checked; a violating pair is
// reported), returns f' that is rho-Lipschitz with max|f'-f| <= delta/2.
std::vector<Rat> lipschitz_correct(const FiniteMetricSpace& space, const std::vector<Rat>& f,
                                   const Rat& delta);

} // namespace flowtype
