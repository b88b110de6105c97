#pragma once

#include "bellcone/cone.hpp"
#include "bellcone/tensor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bellcone {

/// An (n,2,2) Bell scenario: n parties, two binary observables each.
class ScenarioSpec {
 public:
  explicit ScenarioSpec(int parties);
  int parties() const { return n_; }
  std::size_t dim() const { return tensor_size(n_); }

 private:
  int n_;
};

/// Outcome of one party, +-1.
using Outcome = int;

struct SquareCone {
  ConeVRep vrep;
  ConeHRep hrep;
};

/// The one-party cone in coordinates (x^{-1}, x^0, x^{+1}).
SquareCone square_cone();

/// Local deterministic box with outcomes a_minus[j] for A_j^{-1} and a_plus[j] for A_j^{+1}.
CorrelationTensor deterministic_box(std::span<const Outcome> a_minus, std::span<const Outcome> a_plus);

/// All 4^n deterministic boxes; the choice (a^{-1}, a^{+1}) runs in
/// lexicographic order with -1 before +1.
std::vector<CorrelationTensor> deterministic_boxes(int n);

/// The box with every correlator equal to 1.
CorrelationTensor all_ones_box(int n);

ConeVRep bell_cone(int n);
ConeHRep ns_cone(int n);

/// g_v(t,s) = 2^{-n} prod_j h(v_j, t_j, s_j).
Rational g_value(std::span<const Setting> v, std::span<const Outcome> outcomes, std::span<const Setting> settings);

/// The functional x -> P(t|s), i.e. g_.(t,s) as a lower-variance tensor.
FunctionalTensor probability_functional(std::span<const Setting> settings, std::span<const Outcome> outcomes);

struct ProbabilityEntry {
  std::vector<Setting> settings;
  std::vector<Outcome> outcomes;
  Rational probability;
};

/// P(t|s) for all s,t in {-1,+1}^n; settings vary slowest.
std::vector<ProbabilityEntry> probabilities(const CorrelationTensor& x);

/// Lowers a box to its inequality, or raises an inequality to its box.
FunctionalTensor dualize(const CorrelationTensor& x);
CorrelationTensor dualize(const FunctionalTensor& f);

/// F_{s1t1}...F_{sntn} x^s y^t.
Rational bilinear_check(const CorrelationTensor& x, const CorrelationTensor& y);

bool in_ns(const CorrelationTensor& x);
bool in_bell(const CorrelationTensor& x);

/// f in (B_n)*: nonnegative on every deterministic box.
bool is_bell_inequality(const FunctionalTensor& f);

/// f in (NS_n)*: f is a nonnegative combination of the probability functionals.
bool is_trivial_inequality(const FunctionalTensor& f);

struct TrivialityResult {
  /// lower(x) lies in (NS_n)*.
  bool dual_route = false;
  /// x lies in B_n by direct V-rep membership.
  bool direct_route = false;
  bool agree() const { return dual_route == direct_route; }
};

TrivialityResult triviality_analysis(const CorrelationTensor& x);

/// Dual-route answer; throws std::logic_error if the two routes disagree.
bool triviality_check(const CorrelationTensor& x);

struct DualityCounts {
  std::uint64_t vertices = 0;  // l^{kn}
  std::uint64_t facets = 0;    // (lk)^n
  bool duality_possible = false;
};

/// Throws std::invalid_argument for parameters < 1 and std::overflow_error
/// when a count exceeds 64 bits.
DualityCounts duality_count_obstruction(std::uint64_t n, std::uint64_t k, std::uint64_t l);

}  // namespace bellcone
