#include "flowtype/metric.hpp"

#include <algorithm>

#include "flowtype/errors.hpp"

namespace flowtype {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<Rat>> rho) : rho_(std::move(rho)) {
  const int k = static_cast<int>(rho_.size());
  if (k == 0) throw ParseError("metric space must have at least one point");
  for (const auto& row : rho_)
    if (static_cast<int>(row.size()) != k) throw ParseError("metric matrix is not square");
  for (int x = 0; x < k; ++x) {
    if (rho_[x][x] != 0) throw ParseError("metric has nonzero diagonal");
    for (int y = 0; y < k; ++y) {
      if (rho_[x][y] < 0) throw ParseError("metric has a negative entry");
      if (rho_[x][y] != rho_[y][x]) throw ParseError("metric is not symmetric");
    }
  }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (rho_[x][z] > rho_[x][y] + rho_[y][z])
          throw ParseError("metric violates the triangle inequality");
}

std::vector<Rat> lipschitz_correct(const FiniteMetricSpace& space, const std::vector<Rat>& f,
                                   const Rat& delta) {
  const int k = space.size();
  if (static_cast<int>(f.size()) != k) throw ParseError("function has wrong length");
  if (delta <= 0) throw PrecondError("delta must be positive");
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const Rat gap = f[x] >= f[y] ? f[x] - f[y] : f[y] - f[x];
      if (gap > space.rho(x, y) + delta)
        throw PrecondError("|f(" + std::to_string(x) + ") - f(" + std::to_string(y) +
                           ")| exceeds rho + delta");
    }
  // f'(x) = max_y f(y) - delta/2 - rho(x,y): a maximum of rho-Lipschitz
  // functions, pinned within delta/2 of f by the slack hypothesis.
  const Rat half = delta / 2;
  std::vector<Rat> out(k);
  for (int x = 0; x < k; ++x) {
    Rat best = f[x] - half;  // y = x term
    for (int y = 0; y < k; ++y) best = std::max(best, f[y] - half - space.rho(x, y));
    out[x] = best;
  }
  return out;
}

} // namespace flowtype
