#include "bellcone/cone.hpp"

#include <algorithm>

namespace bellcone {

namespace {

Matrix normalize_set(std::size_t dim, Matrix vectors, const char* what) {
  if (dim == 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
  Matrix out;
  out.reserve(vectors.size());
  for (auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch(std::string(what) + ": vector has wrong dimension");
    if (is_zero(v)) continue;
    out.push_back(canonical_ray(v));
  }
  std::sort(out.begin(), out.end(), VectorLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_dim(std::size_t expected, const Vector& x) {
  if (x.size() != expected) {
    throw DimensionMismatch("dimension mismatch: cone has dim " + std::to_string(expected) + ", vector has " +
                            std::to_string(x.size()));
  }
}

}  // namespace

ConeVRep::ConeVRep(std::size_t dim, Matrix generators)
    : dim_(dim), generators_(normalize_set(dim, std::move(generators), "ConeVRep")) {}

ConeHRep::ConeHRep(std::size_t dim, Matrix functionals)
    : dim_(dim), functionals_(normalize_set(dim, std::move(functionals), "ConeHRep")) {}

ConeHRep dual_vrep_to_hrep(const ConeVRep& c) { return ConeHRep(c.dim(), c.generators()); }

ConeVRep dual_hrep_to_vrep(const ConeHRep& c) { return ConeVRep(c.dim(), c.functionals()); }

RayEnumeration enumerate_rays(const ConeHRep& c, const DoubleDescriptionOptions& options) {
  if (c.functionals().empty()) throw std::invalid_argument("enumerate_rays: cone has no constraints");
  return double_description(c.functionals(), c.dim(), options);
}

ConeVRep extreme_rays(const ConeHRep& c, const DoubleDescriptionOptions& options) {
  auto e = enumerate_rays(c, options);
  if (!e.pointed()) {
    throw std::domain_error("cone has a lineality space of dimension " + std::to_string(e.lineality.size()) +
                            "; it has no extreme rays");
  }
  return ConeVRep(c.dim(), std::move(e.rays));
}

ConeHRep facets(const ConeVRep& c, const DoubleDescriptionOptions& options) {
  auto e = enumerate_rays(dual_vrep_to_hrep(c), options);
  if (!e.pointed()) throw std::domain_error("facets: cone is not full-dimensional");
  return ConeHRep(c.dim(), std::move(e.rays));
}

Membership membership(const ConeHRep& c, const Vector& x) {
  check_dim(c.dim(), x);
  Membership m;
  for (const auto& g : c.functionals()) {
    if (dot(g, x).sign() < 0) {
      m.certificate = g;
      return m;
    }
  }
  m.member = true;
  return m;
}

Membership membership(const ConeVRep& c, const Vector& x) {
  check_dim(c.dim(), x);
  Membership m;
  auto lp = conic_combination(c.generators(), x);
  m.member = lp.feasible;
  if (lp.feasible) {
    m.coefficients = std::move(lp.coefficients);
  } else {
    m.certificate = std::move(lp.certificate);
  }
  return m;
}

std::size_t constraint_rank(const ConeHRep& c) { return rank(c.functionals()); }

std::size_t tight_rank(const ConeHRep& c, const Vector& x) {
  check_dim(c.dim(), x);
  Matrix tight;
  for (const auto& g : c.functionals()) {
    if (dot(g, x).is_zero()) tight.push_back(g);
  }
  return rank(tight);
}

bool is_extreme_ray(const ConeHRep& c, const Vector& x) {
  if (!membership(c, x).member) throw std::invalid_argument("is_extreme_ray: vector is not in the cone");
  if (is_zero(x)) return false;
  const std::size_t r = constraint_rank(c);
  return r >= 1 && tight_rank(c, x) == r - 1;
}

Vector kronecker(std::span<const Vector> factors) {
  Vector out{Rational(1)};
  for (const auto& f : factors) {
    Vector next(out.size() * f.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].is_zero()) continue;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (!f[k].is_zero()) next[i * f.size() + k] = out[i] * f[k];
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

template <class Get>
Matrix all_products(std::size_t count, Get get) {
  Matrix result{Vector{Rational(1)}};
  for (std::size_t i = 0; i < count; ++i) {
    Matrix next;
    for (const auto& prefix : result) {
      for (const auto& v : get(i)) {
        const Vector pair_factors[2] = {prefix, v};
        next.push_back(kronecker(pair_factors));
      }
    }
    result = std::move(next);
  }
  return result;
}

}  // namespace

ConeVRep min_tensor_product(std::span<const ConeVRep> cones) {
  if (cones.empty()) throw std::invalid_argument("min_tensor_product: no factors");
  std::size_t dim = 1;
  for (const auto& c : cones) dim *= c.dim();
  return ConeVRep(dim, all_products(cones.size(), [&](std::size_t i) -> const Matrix& { return cones[i].generators(); }));
}

ConeHRep max_tensor_product(std::span<const ConeHRep> cones) {
  if (cones.empty()) throw std::invalid_argument("max_tensor_product: no factors");
  std::size_t dim = 1;
  for (const auto& c : cones) dim *= c.dim();
  return ConeHRep(dim, all_products(cones.size(), [&](std::size_t i) -> const Matrix& { return cones[i].functionals(); }));
}

bool max_product_member_by_slices(std::span<const ConeHRep> cones, const Vector& z) {
  if (cones.empty()) throw std::invalid_argument("max_product_member_by_slices: no factors");
  std::size_t dim = 1;
  for (const auto& c : cones) dim *= c.dim();
  check_dim(dim, z);
  if (cones.size() == 1) return membership(cones.front(), z).member;
  const auto& first = cones.front();
  const std::size_t rest = dim / first.dim();
  for (const auto& g : first.functionals()) {
    // g_s z^{s t}: contract the leading index.
    Vector slice(rest);
    for (std::size_t s = 0; s < first.dim(); ++s) {
      if (g[s].is_zero()) continue;
      for (std::size_t t = 0; t < rest; ++t) {
        const auto& v = z[s * rest + t];
        if (!v.is_zero()) slice[t] += g[s] * v;
      }
    }
    if (!max_product_member_by_slices(cones.subspan(1), slice)) return false;
  }
  return true;
}

ConeHRep remove_redundant(const ConeHRep& c) {
  Matrix kept = c.functionals();
  for (std::size_t i = kept.size(); i-- > 0;) {
    Matrix others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (!others.empty() && conic_combination(others, kept[i]).feasible) kept.erase(kept.begin() + static_cast<long>(i));
  }
  return ConeHRep(c.dim(), std::move(kept));
}

ConeVRep remove_redundant(const ConeVRep& c) {
  const ConeHRep as_h = remove_redundant(ConeHRep(c.dim(), c.generators()));
  return ConeVRep(c.dim(), as_h.functionals());
}

}  // namespace bellcone
