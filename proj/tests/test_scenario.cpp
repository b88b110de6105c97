#include <doctest.h>

#include "oracles.hpp"

#include "bellcone/fixtures.hpp"
#include "bellcone/scenario.hpp"

#include <algorithm>

using namespace bellcone;

namespace {
Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<Vector> sorted_entries(const std::vector<CorrelationTensor>& boxes) {
  std::vector<Vector> out;
  for (const auto& b : boxes) out.push_back(b.entries());
  std::sort(out.begin(), out.end(), VectorLess{});
  return out;
}
}  // namespace

TEST_CASE("square cone fixture") {
  const auto sq = square_cone();
  CHECK(sq.vrep.generators() == Matrix{vec({-1, 1, -1}), vec({-1, 1, 1}), vec({1, 1, -1}), vec({1, 1, 1})});
  CHECK(sq.hrep.functionals() == Matrix{vec({-1, 1, 0}), vec({0, 1, -1}), vec({0, 1, 1}), vec({1, 1, 0})});
}

TEST_CASE("deterministic boxes and the Bell cone") {
  for (int n = 1; n <= 3; ++n) {
    const auto boxes = deterministic_boxes(n);
    CHECK(boxes.size() == (std::size_t{1} << (2 * n)));
    CHECK(sorted_entries(boxes) == sorted_entries(testing::deterministic_boxes_oracle(n)));
    CHECK(bell_cone(n).size() == boxes.size());
  }
  const std::vector<Outcome> minus{1, -1};
  const std::vector<Outcome> plus{-1, -1};
  const auto d = deterministic_box(minus, plus);
  CHECK(d.at({-1, -1}) == Rational(-1));
  CHECK(d.at({1, 0}) == Rational(-1));
  CHECK(d.at({1, 1}) == Rational(1));
  CHECK(d.at({0, 0}) == Rational(1));
  CHECK(all_ones_box(2).at({-1, 1}) == Rational(1));
}

TEST_CASE("g tensor and probabilities") {
  const std::vector<Setting> v{Setting::minus, Setting::none};
  const std::vector<Outcome> t{-1, 1};
  const std::vector<Setting> s{Setting::minus, Setting::plus};
  CHECK(g_value(v, t, s) == Rational(-1, 4));
  const std::vector<Setting> v2{Setting::plus, Setting::none};
  CHECK(g_value(v2, t, s) == Rational(0));
  // Each probability functional has 2^n nonzero entries of magnitude 2^-n.
  const auto g = probability_functional(s, t);
  int nonzero = 0;
  for (const auto& x : g.entries()) {
    if (!x.is_zero()) {
      ++nonzero;
      CHECK(x.abs() == Rational(1, 4));
    }
  }
  CHECK(nonzero == 4);

  // PR box: outcomes agree unless both settings are +1.
  const auto probs = probabilities(pr_box());
  CHECK(probs.size() == 16);
  for (const auto& p : probs) {
    const bool anti = p.settings[0] == Setting::plus && p.settings[1] == Setting::plus;
    const bool equal = p.outcomes[0] == p.outcomes[1];
    CHECK(p.probability == Rational(equal != anti ? 1 : 0, 2));
  }
}

TEST_CASE("no-signaling membership") {
  CHECK(ns_cone(2).size() == 16);
  CHECK(ns_cone(3).size() == 64);
  CHECK(in_ns(pr_box()));
  CHECK(in_ns(all_ones_box(3)));
  CHECK_FALSE(in_ns(pr_box() * Rational(-1)));
  CHECK(in_bell(all_ones_box(2)));
  CHECK_FALSE(in_bell(pr_box()));
}

TEST_CASE("dualization worked examples") {
  CHECK(dualize(pr_box()) == chsh_functional());
  CHECK(dualize(chsh_functional()) == pr_box());
  CHECK(dualize(sliwa17_functional()) == sliwa17_box());
  for (int n = 1; n <= 3; ++n) CHECK(dualize(all_ones_box(n)) == positivity_functional(n));
  CHECK(bilinear_check(pr_box(), pr_box()) == pair(chsh_functional(), pr_box()));
}

TEST_CASE("Bell inequalities and triviality") {
  CHECK(is_bell_inequality(chsh_functional()));
  CHECK_FALSE(is_bell_inequality(chsh_functional() * Rational(-1)));
  CHECK_FALSE(is_trivial_inequality(chsh_functional()));
  CHECK(is_trivial_inequality(positivity_functional(2)));
  CHECK(triviality_check(all_ones_box(2)));
  CHECK_FALSE(triviality_check(pr_box()));
  CHECK(triviality_check(isotropic_box(2)));
  CHECK_FALSE(triviality_check(isotropic_box(3)));
  const auto r = triviality_analysis(isotropic_box(Rational(5, 2)));
  CHECK(r.agree());
  CHECK_FALSE(r.dual_route);
}

TEST_CASE("vertex and facet counts") {
  const auto c = duality_count_obstruction(3, 3, 2);
  CHECK(c.vertices == 512);
  CHECK(c.facets == 216);
  CHECK_FALSE(c.duality_possible);
  CHECK(duality_count_obstruction(4, 2, 2).duality_possible);
  CHECK_THROWS_AS(duality_count_obstruction(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(duality_count_obstruction(100, 4, 4), std::overflow_error);
}
