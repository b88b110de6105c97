#include "bellcone/full_correlation.hpp"

#include <stdexcept>

namespace bellcone {

namespace {

std::size_t full_word_index(int n, std::size_t bits) {
  std::vector<Setting> word(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) word[static_cast<std::size_t>(j)] = ((bits >> (n - 1 - j)) & 1U) ? Setting::plus : Setting::minus;
  return word_index(word);
}

// prod_j F_{s_j t_j} restricted to +-1 letters: 1/2 each, negated when both are +1.
Rational f_product(int n, std::size_t s, std::size_t t) {
  Rational r(1);
  for (int j = 0; j < n; ++j) {
    r *= ((s >> j) & (t >> j) & 1U) ? Rational(-1, 2) : Rational(1, 2);
  }
  return r;
}

}  // namespace

CorrelationTensor full_correlation_box(int n, const Vector& epsilon) {
  CorrelationTensor x(n);
  const std::size_t count = std::size_t{1} << n;
  if (epsilon.size() != count) throw std::invalid_argument("full_correlation_box: expected 2^n values");
  for (std::size_t b = 0; b < count; ++b) {
    if (epsilon[b].abs() > Rational(1)) throw std::invalid_argument("full_correlation_box: |epsilon| > 1 at " + epsilon[b].to_string());
    x[full_word_index(n, b)] = epsilon[b];
  }
  x.at(SettingWord::zeros(n)) = 1;
  return x;
}

FunctionalTensor full_correlation_inequality(int n, const std::vector<int>& signs) {
  tensor_size(n);
  const std::size_t count = std::size_t{1} << n;
  if (signs.size() != count) throw std::invalid_argument("full_correlation_inequality: expected 2^n signs");
  FunctionalTensor f(n);
  for (std::size_t t = 0; t < count; ++t) {
    Rational c;
    for (std::size_t s = 0; s < count; ++s) {
      if (signs[s] != 1 && signs[s] != -1) throw std::invalid_argument("full_correlation_inequality: signs must be +-1");
      c -= signs[s] * f_product(n, s, t);
    }
    f[full_word_index(n, t)] = c;
  }
  f.at(SettingWord::zeros(n)) = 1;
  return f;
}

FullCorrelationTest ww_zb_analysis(const CorrelationTensor& x) {
  const int n = x.parties();
  const std::size_t count = std::size_t{1} << n;
  std::vector<bool> allowed(x.size(), false);
  allowed[SettingWord::zeros(n).index()] = true;
  for (std::size_t b = 0; b < count; ++b) allowed[full_word_index(n, b)] = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!allowed[i] && !x[i].is_zero()) {
      throw std::invalid_argument("ww_zb_local_test: nonzero entry outside the full-correlation support at " +
                                  SettingWord::from_index(n, i).to_string());
    }
  }
  FullCorrelationTest result;
  std::vector<int> signs(count);
  for (std::size_t s = 0; s < count; ++s) {
    Rational xi;
    for (std::size_t t = 0; t < count; ++t) xi += f_product(n, s, t) * x[full_word_index(n, t)];
    signs[s] = xi.sign() < 0 ? -1 : 1;
    result.value += xi.abs();
  }
  result.threshold = x.normalization();
  result.local = result.value <= result.threshold;
  result.inequality = full_correlation_inequality(n, signs);
  return result;
}

bool ww_zb_local_test(const CorrelationTensor& x) { return ww_zb_analysis(x).local; }

}  // namespace bellcone
