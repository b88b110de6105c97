#include <doctest.h>

#include "oracles.hpp"

#include "bellcone/fixtures.hpp"
#include "bellcone/tensor.hpp"

using namespace bellcone;

TEST_CASE("setting words follow the canonical order") {
  CHECK(tensor_size(1) == 3);
  CHECK(tensor_size(3) == 27);
  CHECK_THROWS_AS(tensor_size(0), std::invalid_argument);
  CHECK(SettingWord::zeros(2).index() == 4);
  CHECK(SettingWord::zeros(3).index() == 13);
  CHECK(SettingWord::from_index(2, 0).to_string() == "-1,-1");
  CHECK(SettingWord::from_index(2, 8).to_string() == "+1,+1");
  CHECK(SettingWord::from_index(2, 5).to_string() == "0,+1");
  for (std::size_t i = 0; i < 27; ++i) {
    const auto w = SettingWord::from_index(3, i);
    CHECK(w.index() == i);
    CHECK(SettingWord::parse(w.to_string()) == w);
  }
  CHECK(SettingWord::parse("1,-1").to_string() == "+1,-1");
  CHECK_THROWS_AS(SettingWord::parse("2,0"), std::invalid_argument);
  CHECK(SettingWord::parse("-1,+1").is_full());
  CHECK_FALSE(SettingWord::parse("-1,0").is_full());
}

TEST_CASE("F raises and lowers inversely") {
  const auto& f = f_tensor();
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t v = 0; v < 3; ++v) {
      Rational sum;
      for (std::size_t t = 0; t < 3; ++t) sum += f.lowered[s][t] * f.raised[t][v];
      CHECK(sum == Rational(s == v ? 1 : 0));
      CHECK(f.raised[s][v] == f.raised[v][s]);
    }
  }
  CHECK(f.raised[0][0] == Rational(1));
  CHECK(f.raised[2][2] == Rational(-1));
  CHECK(f.lowered[2][2] == Rational(-1, 2));
  CHECK(f.lowered[1][1] == Rational(1));
}

TEST_CASE("lowering and raising are mutually inverse on random tensors") {
  testing::Rng rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      CorrelationTensor x(n);
      FunctionalTensor f(n);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = testing::random_rational(rng, 9, 5);
        f[i] = testing::random_rational(rng, 9, 5);
      }
      CHECK(raise(lower(x)) == x);
      CHECK(lower(raise(f)) == f);
      // The bilinear form F_{st} x^s y^t is symmetric.
      CorrelationTensor y(n);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = testing::random_rational(rng, 9, 5);
      CHECK(pair(lower(x), y) == pair(lower(y), x));
    }
  }
}

TEST_CASE("tensor access and arithmetic") {
  auto pr = pr_box();
  CHECK(pr.at({1, 1}) == Rational(-1));
  CHECK(pr.at({0, 0}) == Rational(1));
  CHECK(pr.normalization() == Rational(1));
  CHECK_THROWS_AS(pr.at({1}), std::invalid_argument);
  CHECK_THROWS_AS(pr + CorrelationTensor(3), std::invalid_argument);
  CHECK((pr - pr).is_zero());
  CHECK((pr * Rational(2))[0] == Rational(2));
  CHECK_THROWS_AS(pair(chsh_functional(), CorrelationTensor(3)), std::invalid_argument);
}

TEST_CASE("slices, party appending and tensor products") {
  const auto pr = pr_box();
  const auto minus = slice_last(pr, Setting::minus);
  const auto zero = slice_last(pr, Setting::none);
  const auto plus = slice_last(pr, Setting::plus);
  CHECK(minus.at({-1}) == Rational(1));
  CHECK(plus.at({1}) == Rational(-1));
  CHECK(zero.at({0}) == Rational(1));
  CHECK(append_party(minus, zero, plus) == pr);

  CorrelationTensor a(1, {Rational(1), Rational(2), Rational(3)});
  CorrelationTensor b(1, {Rational(5), Rational(7), Rational(11)});
  const auto ab = tensor_product(a, b);
  CHECK(ab.at({-1, 1}) == Rational(11));
  CHECK(ab.at({1, -1}) == Rational(15));
}
