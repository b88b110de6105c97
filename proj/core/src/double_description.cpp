#include "bellcone/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bellcone {

namespace {

struct Overflow {};

// Arithmetic shims so the core below runs on either int64 or GMP integers.
inline std::int64_t z_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t z_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t z_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline int z_sign(std::int64_t a) { return (a > 0) - (a < 0); }
inline std::int64_t z_gcd(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return std::gcd(a, b);
}
inline std::int64_t z_div(std::int64_t a, std::int64_t b) { return a / b; }
inline std::int64_t z_from(const Integer& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
inline Integer z_to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline Integer z_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer z_sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer z_add(const Integer& a, const Integer& b) { return a + b; }
inline int z_sign(const Integer& a) { return sgn(a); }
inline Integer z_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Integer z_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Integer z_from_big(const Integer& v) { return v; }
inline const Integer& z_to_integer(const Integer& v) { return v; }

template <class Z>
Z convert(const Integer& v) {
  if constexpr (std::is_same_v<Z, Integer>) {
    return z_from_big(v);
  } else {
    return z_from(v);
  }
}

using Word = std::uint64_t;

template <class Z>
class DoubleDescriptionCore {
 public:
  DoubleDescriptionCore(const IntegerMatrix& constraints, std::size_t dim)
      : m_(constraints.size()), dim_(dim), words_((constraints.size() + 63) / 64) {
    a_.reserve(m_ * dim_);
    for (const auto& row : constraints) {
      for (const auto& v : row) a_.push_back(convert<Z>(v));
    }
  }

  std::vector<std::vector<Integer>> run(const IntegerMatrix& initial_rays, const std::vector<std::size_t>& initial_rows,
                                        const DoubleDescriptionOptions& options) {
    // The initial simplicial cone: ray i is tight on every initial row but row i.
    std::vector<bool> processed(m_, false);
    for (auto r : initial_rows) processed[r] = true;
    for (std::size_t i = 0; i < initial_rays.size(); ++i) {
      std::vector<Z> ray;
      ray.reserve(dim_);
      for (const auto& v : initial_rays[i]) ray.push_back(convert<Z>(v));
      std::vector<Word> sat(words_, 0);
      for (std::size_t j = 0; j < initial_rows.size(); ++j) {
        if (j != i) set_bit(sat, initial_rows[j]);
      }
      push_ray(ray, sat);
    }

    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t c = 0; c < m_; ++c) {
      if (processed[c]) continue;
      std::size_t violated = 0;
      for (std::size_t i = 0; i < ray_count(); ++i) {
        if (z_sign(evaluate(c, i)) < 0) ++violated;
      }
      order.emplace_back(violated, c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    std::size_t step = 0;
    for (const auto& [violated, c] : order) {
      (void)violated;
      insert(c);
      ++step;
      if (options.progress) options.progress(step, order.size(), ray_count());
    }

    std::vector<std::vector<Integer>> out(ray_count(), std::vector<Integer>(dim_));
    for (std::size_t i = 0; i < ray_count(); ++i) {
      for (std::size_t k = 0; k < dim_; ++k) out[i][k] = z_to_integer(rays_[i * dim_ + k]);
    }
    return out;
  }

 private:
  std::size_t ray_count() const { return rays_.size() / dim_; }

  static void set_bit(std::vector<Word>& s, std::size_t b) { s[b / 64] |= Word{1} << (b % 64); }

  void push_ray(const std::vector<Z>& ray, const std::vector<Word>& sat) {
    rays_.insert(rays_.end(), ray.begin(), ray.end());
    sats_.insert(sats_.end(), sat.begin(), sat.end());
  }

  Z evaluate(std::size_t c, std::size_t i) const {
    Z acc{0};
    const Z* row = &a_[c * dim_];
    const Z* ray = &rays_[i * dim_];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (z_sign(row[k]) != 0 && z_sign(ray[k]) != 0) acc = z_add(acc, z_mul(row[k], ray[k]));
    }
    return acc;
  }

  bool adjacent(std::size_t p, std::size_t q, const Word* common) const {
    const std::size_t n = ray_count();
    for (std::size_t t = 0; t < n; ++t) {
      if (t == p || t == q) continue;
      const Word* s = &sats_[t * words_];
      bool contains = true;
      for (std::size_t w = 0; w < words_; ++w) {
        if ((s[w] & common[w]) != common[w]) {
          contains = false;
          break;
        }
      }
      if (contains) return false;
    }
    return true;
  }

  void insert(std::size_t c) {
    const std::size_t n = ray_count();
    std::vector<Z> values(n);
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = evaluate(c, i);
      const int s = z_sign(values[i]);
      (s > 0 ? pos : (s < 0 ? neg : zero)).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zero) sats_[i * words_ + c / 64] |= Word{1} << (c % 64);
      return;
    }

    // Two rays can only be adjacent if they share at least dim-2 tight constraints.
    const long need = static_cast<long>(dim_) - 2;
    std::vector<Z> new_rays;
    std::vector<Word> new_sats;
    std::vector<Word> common(words_);
    std::vector<Z> ray(dim_);
    for (auto p : pos) {
      const Word* sp = &sats_[p * words_];
      for (auto q : neg) {
        const Word* sq = &sats_[q * words_];
        long count = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          common[w] = sp[w] & sq[w];
          count += std::popcount(common[w]);
        }
        if (count < need) continue;
        if (!adjacent(p, q, common.data())) continue;
        // values[p] > 0 > values[q]; the combination is tight on c.
        const Z& vp = values[p];
        const Z neg_vq = z_sub(Z{0}, values[q]);
        Z g{0};
        for (std::size_t k = 0; k < dim_; ++k) {
          ray[k] = z_add(z_mul(vp, rays_[q * dim_ + k]), z_mul(neg_vq, rays_[p * dim_ + k]));
          if (z_sign(ray[k]) != 0) g = z_gcd(g, ray[k]);
        }
        if (z_sign(g) != 0) {
          for (auto& v : ray) {
            if (z_sign(v) != 0) v = z_div(v, g);
          }
        }
        new_rays.insert(new_rays.end(), ray.begin(), ray.end());
        common[c / 64] |= Word{1} << (c % 64);
        new_sats.insert(new_sats.end(), common.begin(), common.end());
      }
    }

    std::vector<Z> rays;
    std::vector<Word> sats;
    rays.reserve((pos.size() + zero.size()) * dim_ + new_rays.size());
    sats.reserve((pos.size() + zero.size()) * words_ + new_sats.size());
    for (auto i : pos) {
      rays.insert(rays.end(), rays_.begin() + static_cast<long>(i * dim_), rays_.begin() + static_cast<long>((i + 1) * dim_));
      sats.insert(sats.end(), sats_.begin() + static_cast<long>(i * words_), sats_.begin() + static_cast<long>((i + 1) * words_));
    }
    for (auto i : zero) {
      rays.insert(rays.end(), rays_.begin() + static_cast<long>(i * dim_), rays_.begin() + static_cast<long>((i + 1) * dim_));
      sats.insert(sats.end(), sats_.begin() + static_cast<long>(i * words_), sats_.begin() + static_cast<long>((i + 1) * words_));
      sats[sats.size() - words_ + c / 64] |= Word{1} << (c % 64);
    }
    rays.insert(rays.end(), new_rays.begin(), new_rays.end());
    sats.insert(sats.end(), new_sats.begin(), new_sats.end());
    rays_ = std::move(rays);
    sats_ = std::move(sats);
  }

  std::size_t m_;
  std::size_t dim_;
  std::size_t words_;
  std::vector<Z> a_;
  std::vector<Z> rays_;
  std::vector<Word> sats_;
};

}  // namespace

RayEnumeration double_description(const Matrix& constraints, std::size_t dim,
                                  const DoubleDescriptionOptions& options) {
  Matrix rows;
  for (const auto& c : constraints) {
    if (c.size() != dim) throw std::invalid_argument("double_description: constraint dimension mismatch");
    if (!is_zero(c)) rows.push_back(c);
  }

  RayEnumeration result;
  if (rows.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1;
      result.lineality.push_back(std::move(e));
    }
    return result;
  }

  result.lineality = nullspace(rows, dim);

  // Quotient by the lineality space: parametrize the row space x = M^T y.
  Matrix basis_rows;
  Matrix reduced;
  if (!result.lineality.empty()) {
    for (auto i : independent_rows(rows, dim)) basis_rows.push_back(rows[i]);
    for (const auto& row : rows) {
      Vector r(basis_rows.size());
      for (std::size_t b = 0; b < basis_rows.size(); ++b) r[b] = dot(row, basis_rows[b]);
      reduced.push_back(std::move(r));
    }
  } else {
    reduced = rows;
  }
  const std::size_t rdim = reduced.front().size();

  IntegerMatrix int_rows;
  int_rows.reserve(reduced.size());
  for (const auto& r : reduced) int_rows.push_back(to_integer_row(canonical_ray(r)));

  const auto initial_rows = independent_rows(reduced, rdim);
  Matrix square;
  for (auto i : initial_rows) square.push_back(reduced[i]);
  const Matrix inv = inverse(square);
  IntegerMatrix initial_rays;
  for (std::size_t i = 0; i < rdim; ++i) {
    Vector column(rdim);
    for (std::size_t k = 0; k < rdim; ++k) column[k] = inv[k][i];
    initial_rays.push_back(to_integer_row(canonical_ray(column)));
  }

  std::vector<std::vector<Integer>> raw;
  try {
    DoubleDescriptionCore<std::int64_t> core(int_rows, rdim);
    raw = core.run(initial_rays, initial_rows, options);
  } catch (const Overflow&) {
    DoubleDescriptionCore<Integer> core(int_rows, rdim);
    raw = core.run(initial_rays, initial_rows, options);
  }

  result.rays.reserve(raw.size());
  for (const auto& y : raw) {
    Vector x(dim);
    if (basis_rows.empty()) {
      for (std::size_t k = 0; k < dim; ++k) x[k] = Rational(y[k]);
    } else {
      for (std::size_t b = 0; b < basis_rows.size(); ++b) {
        if (y[b] == 0) continue;
        const Rational coeff(y[b]);
        for (std::size_t k = 0; k < dim; ++k) {
          if (!basis_rows[b][k].is_zero()) x[k] += coeff * basis_rows[b][k];
        }
      }
    }
    result.rays.push_back(canonical_ray(x));
  }
  std::sort(result.rays.begin(), result.rays.end(), VectorLess{});
  result.rays.erase(std::unique(result.rays.begin(), result.rays.end()), result.rays.end());
  return result;
}

}  // namespace bellcone
