#include <doctest.h>

#include "oracles.hpp"

#include "bellcone/cone.hpp"
#include "bellcone/fixtures.hpp"
#include "bellcone/lifting.hpp"
#include "bellcone/scenario.hpp"

using namespace bellcone;

namespace {

Involution flip_last_party(int n) { return Involution::parse("flip(" + std::to_string(n) + ")", n); }

CorrelationTensor noise_box(int n) {
  CorrelationTensor x(n);
  x.at(SettingWord::zeros(n)) = 1;
  return x;
}

}  // namespace

TEST_CASE("check_extension agrees with NS membership") {
  CHECK(check_extension(all_ones_box(3)));
  CHECK(check_extension(sliwa17_box()));
  CHECK(check_extension(gyni_box()));
  CHECK(check_extension(pr_box()));
  // Zero slice x^{s,0} with a nonzero x^{s,+1}.
  CorrelationTensor bad(2);
  bad.at({0, 0}) = 1;
  bad.at({-1, 1}) = 2;
  CHECK_FALSE(check_extension(bad));
  CHECK_FALSE(in_ns(bad));
  CHECK_THROWS_AS(check_extension(CorrelationTensor(1)), std::invalid_argument);

  testing::Rng rng(23);
  const auto rays = extreme_rays(ns_cone(2)).generators();
  for (int trial = 0; trial < 40; ++trial) {
    auto z = testing::random_combination(rng, 2, rays, false);
    z[static_cast<std::size_t>(trial % 9)] += testing::random_rational(rng, 3, 2);
    CHECK(check_extension(z) == in_ns(z));
  }
}

TEST_CASE("extend_box examples and precondition failures") {
  const auto id = Involution::identity(2);
  const auto z = extend_box(all_ones_box(2), CorrelationTensor(2), id);
  CHECK(in_ns(z));
  CHECK(slice_last(z, Setting::none) == all_ones_box(2));

  const auto z2 = extend_box(noise_box(2) * Rational(2), pr_box(), id);
  CHECK(in_ns(z2));
  CHECK(check_extension(z2));

  // x not invariant.
  try {
    extend_box(pr_box(), CorrelationTensor(2), Involution::parse("swap(1),flip(1)", 2));
    FAIL("expected a precondition failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "iota-even");
    CHECK_FALSE(e.certificate().empty());
  }
  // x + y leaves NS; the certificate is a violated functional.
  try {
    extend_box(noise_box(2), pr_box() * Rational(-2), id);
    FAIL("expected a precondition failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "membership x+y");
    CHECK(dot(e.certificate(), (noise_box(2) - pr_box() * Rational(2)).entries()).sign() < 0);
  }
  try {
    extend_box(noise_box(2), all_ones_box(2), id);
    FAIL("expected a precondition failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "membership x-y");
  }
}

TEST_CASE("one-party CHSH construction read as boxes") {
  // x = noise, y = the box A^{-1} = 1: z is a two-party box whose lowering is CHSH-like.
  const auto iota = Involution::parse("swap(1)", 1);
  CorrelationTensor x(1, {Rational(0), Rational(1), Rational(0)});
  CorrelationTensor y(1, {Rational(1, 2), Rational(0), Rational(1, 2)});
  const auto z = extend_box(x, y, iota);
  CHECK(in_ns(z));
  CHECK(z.at({-1, -1}) == Rational(1, 2));
  CHECK(z.at({1, 1}) == Rational(1, 2));
}

TEST_CASE("extend_box2 examples") {
  const auto id = Involution::identity(2);
  const auto z = extend_box2(all_ones_box(2), id, id);
  CHECK(slice_last(z, Setting::minus).is_zero());
  CHECK(slice_last(z, Setting::plus).is_zero());
  CHECK(slice_last(z, Setting::none) == all_ones_box(2) * Rational(2));
  CHECK(in_ns(z));

  // Half of (all-ones + PR) has a nonzero iota-odd kappa-even part under the
  // global setting swap and global outcome flip, so the construction refuses it.
  const auto w = (all_ones_box(2) + pr_box()) * Rational(1, 2);
  const auto iota = Involution(SymmetryElement::global_setting_swap(2));
  const auto kappa = Involution(SymmetryElement::global_outcome_flip(2));
  try {
    extend_box2(w, iota, kappa);
    FAIL("expected a noeigen failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "noeigen");
    const auto residual = iota(kappa(w)) - kappa(w) + iota(w) - w;
    CHECK(e.certificate() == residual.entries());
  }
  // Its iota-symmetrization passes and lifts into NS_3.
  const auto w_even = w + iota(w);
  const auto lifted = extend_box2(w_even, iota, kappa);
  CHECK(in_ns(lifted));
  CHECK(recognize_extension(lifted, iota, kappa).w == w_even);

  // A nonzero kappa-odd box is not no-signaling.
  const auto odd = pr_box() - all_ones_box(2);
  CHECK_THROWS_AS(extend_box2(odd - kappa(odd), id, kappa), PreconditionFailure);
  CHECK_THROWS_AS(extend_box2(all_ones_box(2), Involution::parse("swap(1)", 2), Involution::parse("perm(1,2)", 2)),
                  PreconditionFailure);
}

TEST_CASE("recognize_extension") {
  const auto iota = Involution::parse("swap(*)", 2);
  const auto kappa = Involution::parse("flip(2)", 2);
  const auto single = extend_box(noise_box(2) * Rational(2), pr_box(), Involution::identity(2));
  const auto r = recognize_extension(single, Involution::identity(2));
  REQUIRE(r.recognized);
  CHECK(*r.x == noise_box(2) * Rational(2));
  CHECK(*r.y == pr_box());

  const auto gyni = recognize_extension(gyni_box(), iota, kappa);
  CHECK_FALSE(gyni.recognized);
  CHECK_FALSE(gyni.failed_condition.empty());
  CHECK_FALSE(recognize_extension(gyni_box(), iota).recognized);
}

TEST_CASE("find_extensions sweeps involutions") {
  const auto z = extend_box(noise_box(2) * Rational(2), pr_box(), Involution::identity(2));
  const auto matches = find_extensions(z, false);
  bool has_identity = false;
  for (const auto& m : matches) has_identity = has_identity || m.iota.is_identity();
  CHECK(has_identity);
  CHECK(find_extensions(gyni_box(), true).empty());
  CHECK(find_extensions(gyni_box(), false).empty());
  CHECK(find_extensions(sliwa17_box(), true, true).empty());
}

TEST_CASE("extend_inequality examples") {
  FunctionalTensor f(1, {Rational(1), Rational(1), Rational(0)});
  const auto chsh = extend_inequality(f, Involution::parse("swap(1)", 1), Involution::parse("flip(1)", 1));
  CHECK(chsh == chsh_functional());

  const auto id = Involution::identity(2);
  const auto lifted = extend_inequality(positivity_functional(2), id, id);
  CHECK(slice_last(lifted, Setting::none) == positivity_functional(2));
  CHECK(slice_last(lifted, Setting::minus).is_zero());
  CHECK(slice_last(lifted, Setting::plus).is_zero());

  try {
    extend_inequality(chsh_functional() * Rational(-1), id, id);
    FAIL("expected a failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "bell-inequality");
  }
  // Setting swap alone: positivity is not swap-symmetric, so its iota-odd kappa-even part is nonzero.
  try {
    extend_inequality(positivity_functional(2), Involution::parse("swap(1)", 2), id);
    FAIL("expected a failure");
  } catch (const PreconditionFailure& e) {
    CHECK(e.condition() == "eigencondition");
  }
}

TEST_CASE("MK family") {
  CHECK(mermin_klyshko(1) == FunctionalTensor(1, {Rational(1), Rational(1), Rational(0)}));
  CHECK(mermin_klyshko(2) == chsh_functional());
  const auto m3 = mermin_klyshko(3);
  CHECK(m3.at({-1, -1, -1}) == Rational(0));
  CHECK(m3.at({-1, -1, 1}) == Rational(1, 2));
  CHECK(m3.at({1, 1, 1}) == Rational(-1, 2));
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_bell_inequality(mermin_klyshko(n)));
    // Tight: lowering the constant term breaks validity.
    auto weaker = mermin_klyshko(n);
    weaker.at(SettingWord::zeros(n)) = Rational(7, 8);
    CHECK_FALSE(is_bell_inequality(weaker));
  }
  for (int n = 1; n <= 3; ++n) {
    const auto iota = Involution(SymmetryElement::global_setting_swap(n));
    CHECK(extend_inequality(mermin_klyshko(n), iota, flip_last_party(n)) == mermin_klyshko(n + 1));
  }
}

TEST_CASE("lifted inequalities are dual to lifted boxes") {
  const std::vector<std::pair<int, FunctionalTensor>> cases{{1, mermin_klyshko(1)}, {2, mermin_klyshko(2)}, {3, mermin_klyshko(3)}};
  for (const auto& [n, f] : cases) {
    const auto iota = Involution(SymmetryElement::global_setting_swap(n));
    const auto kappa = flip_last_party(n);
    const auto lifted = extend_inequality(f, iota, kappa);
    const auto iota_up = Involution(induced_on_functionals(iota.element()));
    const auto kappa_up = Involution(induced_on_functionals(kappa.element()));
    const auto box = extend_box2(raise(f), iota_up, kappa_up);
    CHECK(canonical_ray(lower(box)) == canonical_ray(lifted));
    CHECK(lower(box) == lifted * Rational(2));
  }
}
