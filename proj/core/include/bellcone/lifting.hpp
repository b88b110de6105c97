#pragma once

#include "bellcone/symmetry.hpp"
#include "bellcone/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellcone {

/// A construction precondition that did not hold. `condition` names it
/// (e.g. "iota-even", "membership x+y", "noeigen"); `certificate` is a
/// violated functional for membership failures and the residual tensor for
/// eigen-conditions.
class PreconditionFailure : public std::runtime_error {
 public:
  PreconditionFailure(std::string condition, const std::string& message, Vector certificate = {});
  const std::string& condition() const { return condition_; }
  const Vector& certificate() const { return certificate_; }

 private:
  std::string condition_;
  Vector certificate_;
};

/// z in NS_{n+1} tested slice-wise: z^{.,0} +- z^{.,t} in NS_n for t = +-1.
/// The new party is the last one. Requires at least two parties.
bool check_extension(const CorrelationTensor& z);

/// z^{.,-1} = y, z^{.,0} = x, z^{.,+1} = iota(y). Verifies iota(x) = x and
/// x +- y in NS_n; throws PreconditionFailure otherwise.
CorrelationTensor extend_box(const CorrelationTensor& x, const CorrelationTensor& y, const Involution& iota);

/// z^{.,-1} = w - kappa(w), z^{.,0} = w + kappa(w), z^{.,+1} = iota(w) - iota kappa(w).
/// Verifies w in NS_n, iota kappa = kappa iota and
/// iota kappa(w) = kappa(w) - iota(w) + w.
CorrelationTensor extend_box2(const CorrelationTensor& w, const Involution& iota, const Involution& kappa);

struct Recognition {
  bool recognized = false;
  /// Empty when recognized.
  std::string failed_condition;
  /// Single-involution mode.
  std::optional<CorrelationTensor> x;
  std::optional<CorrelationTensor> y;
  /// Two-involution mode.
  std::optional<CorrelationTensor> w;
};

/// Is z = extend_box(x, y, iota) for some x, y?
Recognition recognize_extension(const CorrelationTensor& z, const Involution& iota);

/// Is z = extend_box2(w, iota, kappa) for some w?
Recognition recognize_extension(const CorrelationTensor& z, const Involution& iota, const Involution& kappa);

struct ExtensionMatch {
  SymmetryElement iota;
  std::optional<SymmetryElement> kappa;
  Recognition recognition;
};

/// Every involution (or commuting pair of involutions) on the first n parties
/// under which z is recognized. Without `full_group` only setting swaps and
/// outcome flips are searched.
std::vector<ExtensionMatch> find_extensions(const CorrelationTensor& z, bool two_involutions, bool full_group = false);

/// Lifts a Bell inequality f to n+1 parties: the kappa-odd iota-odd part of f
/// gets the new letter +1, the kappa-odd iota-even part gets -1 and the
/// kappa-even part gets 0. Requires f in (B_n)* and a vanishing iota-odd
/// kappa-even part, i.e. iota kappa(f) = kappa(f) - iota(f) + f.
FunctionalTensor extend_inequality(const FunctionalTensor& f, const Involution& iota, const Involution& kappa);

/// M_n + <A^0...A^0> >= 0 with M_n from the MK recursion
/// M_{n+1} = M_n (A^{-1} + A^{+1})/2 + M'_n (A^{-1} - A^{+1})/2.
FunctionalTensor mermin_klyshko(int n);

}  // namespace bellcone
