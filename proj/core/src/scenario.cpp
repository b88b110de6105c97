#include "bellcone/scenario.hpp"

#include <stdexcept>

namespace bellcone {

ScenarioSpec::ScenarioSpec(int parties) : n_(parties) {
  if (parties < 1) throw std::invalid_argument("a scenario needs at least one party");
  tensor_size(parties);
}

SquareCone square_cone() {
  Matrix gens = {{-1, 1, -1}, {-1, 1, 1}, {1, 1, -1}, {1, 1, 1}};
  Matrix ineqs = {{-1, 1, 0}, {1, 1, 0}, {0, 1, -1}, {0, 1, 1}};
  return {ConeVRep(3, std::move(gens)), ConeHRep(3, std::move(ineqs))};
}

CorrelationTensor deterministic_box(std::span<const Outcome> a_minus, std::span<const Outcome> a_plus) {
  if (a_minus.size() != a_plus.size()) throw std::invalid_argument("deterministic_box: outcome lists differ in length");
  const int n = static_cast<int>(a_minus.size());
  for (std::size_t j = 0; j < a_minus.size(); ++j) {
    if ((a_minus[j] != 1 && a_minus[j] != -1) || (a_plus[j] != 1 && a_plus[j] != -1)) {
      throw std::invalid_argument("deterministic_box: outcomes must be +-1");
    }
  }
  CorrelationTensor x(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto w = SettingWord::from_index(n, i);
    int v = 1;
    for (std::size_t j = 0; j < a_minus.size(); ++j) {
      if (w[j] == Setting::minus) v *= a_minus[j];
      if (w[j] == Setting::plus) v *= a_plus[j];
    }
    x[i] = v;
  }
  return x;
}

std::vector<CorrelationTensor> deterministic_boxes(int n) {
  tensor_size(n);
  std::vector<CorrelationTensor> out;
  const std::size_t choices = std::size_t{1} << (2 * n);
  std::vector<Outcome> minus(static_cast<std::size_t>(n)), plus(static_cast<std::size_t>(n));
  for (std::size_t code = 0; code < choices; ++code) {
    // Bits, most significant first: a^{-1}_1..a^{-1}_n, then a^{+1}_1..a^{+1}_n.
    for (int j = 0; j < n; ++j) {
      minus[static_cast<std::size_t>(j)] = (code >> (2 * n - 1 - j)) & 1 ? 1 : -1;
      plus[static_cast<std::size_t>(j)] = (code >> (n - 1 - j)) & 1 ? 1 : -1;
    }
    out.push_back(deterministic_box(minus, plus));
  }
  return out;
}

CorrelationTensor all_ones_box(int n) {
  std::vector<Outcome> ones(static_cast<std::size_t>(n), 1);
  return deterministic_box(ones, ones);
}

ConeVRep bell_cone(int n) {
  Matrix gens;
  for (auto& d : deterministic_boxes(n)) gens.push_back(std::move(d.entries()));
  return ConeVRep(tensor_size(n), std::move(gens));
}

Rational g_value(std::span<const Setting> v, std::span<const Outcome> outcomes, std::span<const Setting> settings) {
  if (v.size() != outcomes.size() || v.size() != settings.size()) throw std::invalid_argument("g_value: length mismatch");
  int product = 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (settings[j] == Setting::none) throw std::invalid_argument("g_value: settings must be +-1");
    if (v[j] == Setting::none) continue;
    if (v[j] == settings[j]) {
      product *= outcomes[j];
    } else {
      return Rational(0);
    }
  }
  return Rational(Integer(product), Integer(1) << static_cast<mp_bitcnt_t>(v.size()));
}

FunctionalTensor probability_functional(std::span<const Setting> settings, std::span<const Outcome> outcomes) {
  const int n = static_cast<int>(settings.size());
  FunctionalTensor g(n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto w = SettingWord::from_index(n, i);
    g[i] = g_value(w.letters(), outcomes, settings);
  }
  return g;
}

namespace {

template <class F>
void for_each_setting_outcome(int n, F f) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<Setting> s(static_cast<std::size_t>(n));
  std::vector<Outcome> t(static_cast<std::size_t>(n));
  for (std::size_t sc = 0; sc < count; ++sc) {
    for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = (sc >> (n - 1 - j)) & 1 ? Setting::plus : Setting::minus;
    for (std::size_t tc = 0; tc < count; ++tc) {
      for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j)] = (tc >> (n - 1 - j)) & 1 ? 1 : -1;
      f(s, t);
    }
  }
}

}  // namespace

ConeHRep ns_cone(int n) {
  Matrix rows;
  for_each_setting_outcome(n, [&](const auto& s, const auto& t) { rows.push_back(probability_functional(s, t).entries()); });
  return ConeHRep(tensor_size(n), std::move(rows));
}

std::vector<ProbabilityEntry> probabilities(const CorrelationTensor& x) {
  std::vector<ProbabilityEntry> out;
  for_each_setting_outcome(x.parties(), [&](const auto& s, const auto& t) {
    out.push_back({s, t, pair(probability_functional(s, t), x)});
  });
  return out;
}

FunctionalTensor dualize(const CorrelationTensor& x) { return lower(x); }
CorrelationTensor dualize(const FunctionalTensor& f) { return raise(f); }

Rational bilinear_check(const CorrelationTensor& x, const CorrelationTensor& y) { return pair(lower(x), y); }

bool in_ns(const CorrelationTensor& x) { return membership(ns_cone(x.parties()), x.entries()).member; }

bool in_bell(const CorrelationTensor& x) { return membership(bell_cone(x.parties()), x.entries()).member; }

bool is_bell_inequality(const FunctionalTensor& f) {
  for (const auto& d : deterministic_boxes(f.parties())) {
    if (pair(f, d).sign() < 0) return false;
  }
  return true;
}

bool is_trivial_inequality(const FunctionalTensor& f) {
  return membership(dual_hrep_to_vrep(ns_cone(f.parties())), f.entries()).member;
}

TrivialityResult triviality_analysis(const CorrelationTensor& x) {
  TrivialityResult r;
  r.dual_route = is_trivial_inequality(lower(x));
  r.direct_route = in_bell(x);
  return r;
}

bool triviality_check(const CorrelationTensor& x) {
  const auto r = triviality_analysis(x);
  if (!r.agree()) throw std::logic_error("triviality_check: dual and direct routes disagree");
  return r.dual_route;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("count exceeds 64 bits");
  }
  return r;
}

}  // namespace

DualityCounts duality_count_obstruction(std::uint64_t n, std::uint64_t k, std::uint64_t l) {
  if (n < 1 || k < 1 || l < 1) throw std::invalid_argument("duality_count_obstruction: n, k, l must be >= 1");
  std::uint64_t kn;
  if (__builtin_mul_overflow(k, n, &kn)) throw std::overflow_error("count exceeds 64 bits");
  std::uint64_t lk;
  if (__builtin_mul_overflow(l, k, &lk)) throw std::overflow_error("count exceeds 64 bits");
  DualityCounts c;
  c.vertices = checked_pow(l, kn);
  c.facets = checked_pow(lk, n);
  c.duality_possible = c.vertices == c.facets;
  return c;
}

}  // namespace bellcone
