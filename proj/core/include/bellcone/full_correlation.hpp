#pragma once

#include "bellcone/tensor.hpp"

#include <vector>

namespace bellcone {

/// Box with x^s = epsilon_s on the 2^n words over {-1,+1} (canonical order,
/// -1 before +1, first party most significant), x^{0...0} = 1 and zero
/// elsewhere. Throws std::invalid_argument if some |epsilon_s| > 1.
CorrelationTensor full_correlation_box(int n, const Vector& epsilon);

/// Full-correlation inequality for a sign pattern sigma over {-1,+1}^n:
/// x^{0...0} - sum_s sigma_s xi_s >= 0 with xi_s = sum_t F_{s1t1}...F_{sntn} x^t.
FunctionalTensor full_correlation_inequality(int n, const std::vector<int>& signs);

struct FullCorrelationTest {
  bool local = false;
  /// sum_s |xi_s|.
  Rational value;
  /// x^{0...0}.
  Rational threshold;
  /// The inequality of the sign pattern of xi; it is violated iff the box is nonlocal.
  FunctionalTensor inequality;
};

/// Locality of a box supported on full correlators and the all-zero word:
/// local iff sum_s |xi_s| <= x^{0...0}. Throws std::invalid_argument for
/// entries outside that support.
FullCorrelationTest ww_zb_analysis(const CorrelationTensor& x);
bool ww_zb_local_test(const CorrelationTensor& x);

}  // namespace bellcone
