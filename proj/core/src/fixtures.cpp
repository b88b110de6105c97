#include "bellcone/fixtures.hpp"

#include "bellcone/symmetry.hpp"

#include <utility>
#include <vector>

namespace bellcone {

namespace {

using Term = std::pair<std::vector<int>, Rational>;

template <Variance V>
Tensor<V> from_terms(int n, const std::vector<Term>& terms) {
  Tensor<V> t(n);
  std::vector<Setting> word(static_cast<std::size_t>(n));
  for (const auto& [letters, coefficient] : terms) {
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = setting_from_int(letters[j]);
    t[word_index(word)] = coefficient;
  }
  return t;
}

const Rational half(1, 2);
const Rational quarter(1, 4);

}  // namespace

CorrelationTensor pr_box() {
  return from_terms<Variance::upper>(2, {{{0, 0}, 1}, {{-1, -1}, 1}, {{-1, 1}, 1}, {{1, -1}, 1}, {{1, 1}, -1}});
}

FunctionalTensor chsh_functional() {
  return from_terms<Variance::lower>(2, {{{0, 0}, 1}, {{-1, -1}, half}, {{-1, 1}, half}, {{1, -1}, half}, {{1, 1}, -half}});
}

CorrelationTensor isotropic_box(const Rational& c) {
  const Rational e = c * quarter;
  return from_terms<Variance::upper>(2, {{{0, 0}, 1}, {{-1, -1}, e}, {{-1, 1}, e}, {{1, -1}, e}, {{1, 1}, -e}});
}

Rational tsirelson_selfdual_value(const Rational& c) {
  const auto x = isotropic_box(c);
  const auto flip = SymmetryElement::outcome_flip(2, 1, Setting::minus);
  const auto both = compose(SymmetryElement::outcome_flip(2, 1, Setting::plus), flip);
  return pair(act(both, lower(x)), x);
}

CorrelationTensor gyni_box() {
  return from_terms<Variance::upper>(3, {{{0, 0, 0}, 1},
                                         {{-1, 1, 0}, 1},
                                         {{0, -1, 1}, 1},
                                         {{1, 0, -1}, 1},
                                         {{-1, -1, -1}, 1},
                                         {{1, 1, 1}, -1}});
}

FunctionalTensor sliwa17_functional() {
  return from_terms<Variance::lower>(3, {{{0, 0, 0}, 1},
                                         {{-1, 0, 0}, quarter},
                                         {{1, 0, 0}, quarter},
                                         {{-1, -1, 0}, quarter},
                                         {{1, -1, 0}, quarter},
                                         {{-1, 0, -1}, quarter},
                                         {{1, 0, -1}, quarter},
                                         {{-1, -1, -1}, -quarter},
                                         {{1, -1, -1}, -quarter},
                                         {{-1, 1, 1}, half},
                                         {{1, 1, 1}, -half}});
}

CorrelationTensor sliwa17_box() {
  return from_terms<Variance::upper>(3, {{{0, 0, 0}, 1},
                                         {{-1, 0, 0}, half},
                                         {{-1, -1, 0}, half},
                                         {{-1, 1, 0}, half},
                                         {{-1, 0, -1}, half},
                                         {{-1, 0, 1}, half},
                                         {{-1, -1, -1}, -half},
                                         {{-1, -1, 1}, -half},
                                         {{-1, 1, -1}, -half},
                                         {{-1, 1, 1}, -half},
                                         {{1, -1, -1}, 1},
                                         {{1, -1, 1}, -1},
                                         {{1, 1, -1}, -1},
                                         {{1, 1, 1}, 1}});
}

FunctionalTensor positivity_functional(int n) {
  // 2^n g_v(+1...+1, -1...-1): 1 where every letter is -1 or 0.
  FunctionalTensor f(n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto w = SettingWord::from_index(n, i);
    bool hit = true;
    for (Setting s : w.letters()) hit = hit && s != Setting::plus;
    if (hit) f[i] = 1;
  }
  return f;
}

}  // namespace bellcone
