#include "oracles.hpp"

#include "bellcone/cone.hpp"
#include "bellcone/lp.hpp"
#include "bellcone/scenario.hpp"

#include <algorithm>
#include <functional>

namespace bellcone::testing {

Matrix brute_force_rays(const Matrix& constraints, std::size_t dim) {
  Matrix rays;
  const std::size_t m = constraints.size();
  const std::size_t k = dim - 1;
  if (k == 0) return {{Rational(1)}};
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t depth, std::size_t start) {
    if (depth == k) {
      Matrix sub;
      for (auto i : pick) sub.push_back(constraints[i]);
      if (rank(sub) != k) return;
      const auto kernel = nullspace(sub, dim);
      for (int sign : {1, -1}) {
        Vector v = kernel.front();
        if (sign < 0) {
          for (auto& x : v) x = -x;
        }
        bool ok = true;
        for (const auto& row : constraints) ok = ok && dot(row, v).sign() >= 0;
        if (ok) rays.push_back(canonical_ray(v));
      }
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= m; ++i) {
      pick[depth] = i;
      recurse(depth + 1, i + 1);
    }
  };
  recurse(0, 0);
  std::sort(rays.begin(), rays.end(), VectorLess{});
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

namespace {

std::size_t full_index(int n, std::size_t bits) {
  std::vector<Setting> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = (bits >> (n - 1 - j)) & 1U ? Setting::plus : Setting::minus;
  return word_index(w);
}

}  // namespace

std::vector<CorrelationTensor> deterministic_boxes_oracle(int n) {
  std::vector<CorrelationTensor> out;
  const std::size_t parties = static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < (std::size_t{1} << (2 * parties)); ++code) {
    // Outcome of party j for letters -1 and +1.
    std::vector<std::array<int, 2>> a(parties);
    for (std::size_t j = 0; j < parties; ++j) {
      a[j][0] = (code >> (2 * j)) & 1U ? -1 : 1;
      a[j][1] = (code >> (2 * j + 1)) & 1U ? -1 : 1;
    }
    CorrelationTensor x(n);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto w = SettingWord::from_index(n, i);
      int v = 1;
      for (std::size_t j = 0; j < parties; ++j) {
        if (w[j] == Setting::minus) v *= a[j][0];
        if (w[j] == Setting::plus) v *= a[j][1];
      }
      x[i] = v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool full_correlation_member_oracle(const CorrelationTensor& x) {
  const int n = x.parties();
  const std::size_t count = std::size_t{1} << n;
  Matrix generators;
  for (const auto& d : deterministic_boxes_oracle(n)) {
    Vector g{Rational(1)};
    for (std::size_t b = 0; b < count; ++b) g.push_back(d[full_index(n, b)]);
    generators.push_back(std::move(g));
  }
  Vector target{x.normalization()};
  for (std::size_t b = 0; b < count; ++b) target.push_back(x[full_index(n, b)]);
  return conic_combination(generators, target).feasible;
}

Rational random_rational(Rng& rng, int max_abs_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(-max_abs_numerator, max_abs_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  return Rational(num(rng), den(rng));
}

CorrelationTensor random_combination(Rng& rng, int n, const Matrix& rays, bool strictly_positive) {
  std::uniform_int_distribution<int> weight(strictly_positive ? 1 : 0, 4);
  CorrelationTensor x(n);
  for (const auto& r : rays) {
    const int w = weight(rng);
    if (w == 0) continue;
    for (std::size_t i = 0; i < r.size(); ++i) x[i] += Rational(w) * r[i];
  }
  return x;
}

std::vector<Involution> involutions(const SymmetryGroup& group) {
  std::vector<Involution> out;
  for (const auto& g : group.elements()) {
    if (compose(g, g).is_identity()) out.emplace_back(g);
  }
  return out;
}

BoxLiftInput random_box_lift_input(Rng& rng, const Matrix& ns_rays, const std::vector<Involution>& pool) {
  const int n = pool.front().parties();
  const auto& iota = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  // x = (P+Q)/2, y = (P-Q)/2 with P, Q in NS and P+Q iota-even.
  const auto a = random_combination(rng, n, ns_rays, false);
  const auto r1 = random_combination(rng, n, ns_rays, false);
  const auto r2 = random_combination(rng, n, ns_rays, false);
  const auto p = a + r1 + iota(r1);
  const auto q = iota(a) + r2 + iota(r2);
  const Rational half(1, 2);
  return {(p + q) * half, (p - q) * half, iota};
}

Box2LiftInput random_box2_lift_input(Rng& rng, const Matrix& ns_rays, const std::vector<Involution>& pool) {
  const int n = pool.front().parties();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (true) {
    const auto& iota = pool[pick(rng)];
    const auto& kappa = pool[pick(rng)];
    if (compose(iota.element(), kappa.element()) != compose(kappa.element(), iota.element())) continue;
    // iota-even interior part plus a kappa-odd perturbation scaled back into NS.
    const auto c = random_combination(rng, n, ns_rays, true);
    const auto base = c + iota(c);
    const auto d = random_combination(rng, n, ns_rays, false);
    const auto odd = d - kappa(d);
    Rational eps(1);
    const auto ns = ns_cone(n);
    for (int step = 0; step < 8; ++step, eps *= Rational(1, 2)) {
      const auto w = base + odd * eps;
      if (membership(ns, w.entries()).member) return {w, iota, kappa};
    }
    return {base, iota, kappa};
  }
}

}  // namespace bellcone::testing
