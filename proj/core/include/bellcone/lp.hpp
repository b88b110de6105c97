#pragma once

#include "bellcone/linalg.hpp"

namespace bellcone {

/// Outcome of deciding whether `target` lies in cone(generators).
struct ConicCombination {
  bool feasible = false;
  /// One nonnegative coefficient per generator when feasible.
  Vector coefficients;
  /// When infeasible: a functional y with y.g >= 0 for every generator and
  /// y.target < 0.
  Vector certificate;
};

/// Exact phase-I simplex (Bland's rule) on sum_j lambda_j g_j = target,
/// lambda >= 0. Throws std::invalid_argument on dimension mismatch.
ConicCombination conic_combination(const Matrix& generators, const Vector& target);

}  // namespace bellcone
