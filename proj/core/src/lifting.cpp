#include "bellcone/lifting.hpp"

#include "bellcone/scenario.hpp"

#include <array>
#include <map>
#include <mutex>

namespace bellcone {

PreconditionFailure::PreconditionFailure(std::string condition, const std::string& message, Vector certificate)
    : std::runtime_error(condition + ": " + message), condition_(std::move(condition)), certificate_(std::move(certificate)) {}

namespace {

const ConeHRep& cached_ns_cone(int n) {
  static std::mutex mutex;
  static std::map<int, ConeHRep> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ns_cone(n)).first;
  return it->second;
}

void require_ns(const CorrelationTensor& x, const std::string& condition) {
  const auto m = membership(cached_ns_cone(x.parties()), x.entries());
  if (!m.member) throw PreconditionFailure(condition, "box is not no-signaling", *m.certificate);
}

void require_parties(const Involution& g, int n, const char* what) {
  if (g.parties() != n) throw std::invalid_argument(std::string(what) + ": involution acts on a different party count");
}

bool commute(const Involution& a, const Involution& b) {
  return compose(a.element(), b.element()) == compose(b.element(), a.element());
}

template <Variance V>
Tensor<V> noeigen_residual(const Tensor<V>& t, const Involution& iota, const Involution& kappa) {
  // iota kappa(t) - kappa(t) + iota(t) - t; zero iff the iota-odd kappa-even part of t vanishes.
  return iota(kappa(t)) - kappa(t) + iota(t) - t;
}

}  // namespace

bool check_extension(const CorrelationTensor& z) {
  if (z.parties() < 2) throw std::invalid_argument("check_extension: need at least two parties");
  const auto& ns = cached_ns_cone(z.parties() - 1);
  const auto zero = slice_last(z, Setting::none);
  for (Setting t : kMeasured) {
    const auto slice = slice_last(z, t);
    if (!membership(ns, (zero + slice).entries()).member) return false;
    if (!membership(ns, (zero - slice).entries()).member) return false;
  }
  return true;
}

CorrelationTensor extend_box(const CorrelationTensor& x, const CorrelationTensor& y, const Involution& iota) {
  if (x.parties() != y.parties()) throw std::invalid_argument("extend_box: party counts differ");
  require_parties(iota, x.parties(), "extend_box");
  const auto ix = iota(x);
  if (ix != x) throw PreconditionFailure("iota-even", "x is not invariant under iota", (ix - x).entries());
  require_ns(x + y, "membership x+y");
  require_ns(x - y, "membership x-y");
  return append_party(y, x, iota(y));
}

CorrelationTensor extend_box2(const CorrelationTensor& w, const Involution& iota, const Involution& kappa) {
  require_parties(iota, w.parties(), "extend_box2");
  require_parties(kappa, w.parties(), "extend_box2");
  if (!commute(iota, kappa)) throw PreconditionFailure("commuting", "iota and kappa do not commute");
  require_ns(w, "membership w");
  const auto residual = noeigen_residual(w, iota, kappa);
  if (!residual.is_zero()) {
    throw PreconditionFailure("noeigen", "iota kappa(w) != kappa(w) - iota(w) + w", residual.entries());
  }
  const auto kw = kappa(w);
  return append_party(w - kw, w + kw, iota(w) - iota(kw));
}

namespace {

Recognition failed(std::string condition) {
  Recognition r;
  r.failed_condition = std::move(condition);
  return r;
}

}  // namespace

Recognition recognize_extension(const CorrelationTensor& z, const Involution& iota) {
  if (z.parties() < 2) throw std::invalid_argument("recognize_extension: need at least two parties");
  require_parties(iota, z.parties() - 1, "recognize_extension");
  const auto minus = slice_last(z, Setting::minus);
  const auto zero = slice_last(z, Setting::none);
  const auto plus = slice_last(z, Setting::plus);
  if (iota(zero) != zero) return failed("iota-even z^0");
  if (iota(minus) != plus) return failed("iota maps z^-1 to z^+1");
  Recognition r;
  r.recognized = true;
  r.x = zero;
  r.y = minus;
  return r;
}

Recognition recognize_extension(const CorrelationTensor& z, const Involution& iota, const Involution& kappa) {
  if (z.parties() < 2) throw std::invalid_argument("recognize_extension: need at least two parties");
  require_parties(iota, z.parties() - 1, "recognize_extension");
  require_parties(kappa, z.parties() - 1, "recognize_extension");
  if (!commute(iota, kappa)) return failed("commuting");
  const auto minus = slice_last(z, Setting::minus);
  const auto zero = slice_last(z, Setting::none);
  const auto plus = slice_last(z, Setting::plus);
  if (kappa(zero) != zero) return failed("kappa-even z^0");
  if (iota(zero) != zero) return failed("iota-even z^0");
  if (kappa(minus) != -minus) return failed("kappa-odd z^-1");
  if (kappa(plus) != -plus) return failed("kappa-odd z^+1");
  if (iota(minus) != plus) return failed("iota maps z^-1 to z^+1");
  const auto w = (zero + minus) * Rational(1, 2);
  if (!noeigen_residual(w, iota, kappa).is_zero()) throw std::logic_error("recognize_extension: noeigen failed on a recognized box");
  Recognition r;
  r.recognized = true;
  r.w = w;
  return r;
}

std::vector<ExtensionMatch> find_extensions(const CorrelationTensor& z, bool two_involutions, bool full_group) {
  if (z.parties() < 2) throw std::invalid_argument("find_extensions: need at least two parties");
  const int n = z.parties() - 1;
  const auto group = full_group ? SymmetryGroup::full(n) : SymmetryGroup::without_party_permutations(n);
  std::vector<Involution> involutions;
  for (const auto& g : group.elements()) {
    if (compose(g, g).is_identity()) involutions.emplace_back(g);
  }
  std::vector<ExtensionMatch> matches;
  for (const auto& iota : involutions) {
    if (!two_involutions) {
      auto r = recognize_extension(z, iota);
      if (r.recognized) matches.push_back({iota.element(), std::nullopt, std::move(r)});
      continue;
    }
    for (const auto& kappa : involutions) {
      auto r = recognize_extension(z, iota, kappa);
      if (r.recognized) matches.push_back({iota.element(), kappa.element(), std::move(r)});
    }
  }
  return matches;
}

namespace {

std::optional<CorrelationTensor> violated_generator(const FunctionalTensor& f) {
  for (const auto& d : deterministic_boxes(f.parties())) {
    if (pair(f, d).sign() < 0) return d;
  }
  return std::nullopt;
}

}  // namespace

FunctionalTensor extend_inequality(const FunctionalTensor& f, const Involution& iota, const Involution& kappa) {
  require_parties(iota, f.parties(), "extend_inequality");
  require_parties(kappa, f.parties(), "extend_inequality");
  if (!commute(iota, kappa)) throw PreconditionFailure("commuting", "iota and kappa do not commute");
  if (auto d = violated_generator(f)) {
    throw PreconditionFailure("bell-inequality", "f is negative on a deterministic box", d->entries());
  }
  const auto residual = noeigen_residual(f, iota, kappa);
  if (!residual.is_zero()) {
    throw PreconditionFailure("eigencondition", "iota kappa(f) != kappa(f) - iota(f) + f", residual.entries());
  }
  const Rational half(1, 2);
  const auto kf = kappa(f);
  const auto even = (f + kf) * half;
  const auto odd = (f - kf) * half;
  const auto iodd = iota(odd);
  const auto odd_even = (odd + iodd) * half;
  const auto odd_odd = (odd - iodd) * half;
  auto out = append_party(odd_even, even, odd_odd);
  if (auto d = violated_generator(out)) throw std::logic_error("extend_inequality: lifted functional is not a Bell inequality");
  return out;
}

FunctionalTensor mermin_klyshko(int n) {
  tensor_size(n);
  // M and M' over {-1,+1}^k, bit j (most significant first) set for letter +1.
  std::vector<Rational> m{Rational(1)};
  std::vector<Rational> mp{Rational(1)};
  const Rational half(1, 2);
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> next(2 * m.size());
    std::vector<Rational> next_p(2 * m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      next[2 * i] = half * (m[i] + mp[i]);
      next[2 * i + 1] = half * (m[i] - mp[i]);
      next_p[2 * i] = half * (mp[i] - m[i]);
      next_p[2 * i + 1] = half * (mp[i] + m[i]);
    }
    m = std::move(next);
    mp = std::move(next_p);
  }
  FunctionalTensor f(n);
  std::vector<Setting> word(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      const bool plus = (i >> (n - 1 - j)) & 1U;
      word[static_cast<std::size_t>(j)] = plus ? Setting::plus : Setting::minus;
    }
    f[word_index(word)] = m[i];
  }
  f.at(SettingWord::zeros(n)) = 1;
  return f;
}

}  // namespace bellcone
