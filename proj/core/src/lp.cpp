#include "bellcone/lp.hpp"

#include <stdexcept>

namespace bellcone {

ConicCombination conic_combination(const Matrix& generators, const Vector& target) {
  const std::size_t d = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("conic_combination: dimension mismatch");
  }

  // Columns: k generator weights, then d artificials; last column is the rhs.
  const std::size_t cols = k + d;
  std::vector<int> row_sign(d, 1);
  Matrix tab(d, Vector(cols + 1));
  for (std::size_t i = 0; i < d; ++i) {
    row_sign[i] = target[i].sign() < 0 ? -1 : 1;
    const Rational s(row_sign[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (!generators[j][i].is_zero()) tab[i][j] = s * generators[j][i];
    }
    tab[i][k + i] = 1;
    tab[i][cols] = s * target[i];
  }
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = k + i;

  // Reduced costs for minimizing the sum of artificials.
  Vector cost(cols + 1);
  for (std::size_t j = 0; j < cols; ++j) cost[j] = j >= k ? Rational(1) : Rational(0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (!tab[i][j].is_zero()) cost[j] -= tab[i][j];
    }
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j].sign() < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = d;
    Rational best;
    for (std::size_t i = 0; i < d; ++i) {
      if (tab[i][entering].sign() <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][entering];
      if (leaving == d || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = std::move(ratio);
      }
    }
    if (leaving == d) throw std::logic_error("conic_combination: phase-I objective unbounded");

    const Rational inv = Rational(1) / tab[leaving][entering];
    for (auto& x : tab[leaving]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leaving || tab[i][entering].is_zero()) continue;
      const Rational f = tab[i][entering];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!tab[leaving][j].is_zero()) tab[i][j] -= f * tab[leaving][j];
      }
    }
    if (!cost[entering].is_zero()) {
      const Rational f = cost[entering];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (!tab[leaving][j].is_zero()) cost[j] -= f * tab[leaving][j];
      }
    }
    basis[leaving] = entering;
  }

  ConicCombination result;
  // cost[cols] holds minus the objective value.
  if (cost[cols].is_zero()) {
    result.feasible = true;
    result.coefficients.assign(k, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (basis[i] < k) result.coefficients[basis[i]] = tab[i][cols];
    }
    return result;
  }
  // Simplex multipliers y_i = 1 - reduced cost of artificial i; the
  // certificate in original coordinates is -D y.
  result.certificate.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rational y = Rational(1) - cost[k + i];
    result.certificate[i] = Rational(-row_sign[i]) * y;
  }
  result.certificate = canonical_ray(result.certificate);
  return result;
}

}  // namespace bellcone
