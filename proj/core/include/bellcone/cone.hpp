#pragma once

#include "bellcone/double_description.hpp"
#include "bellcone/lp.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bellcone {

/// cone(generators): all nonnegative combinations. Generators are kept
/// ray-normalized, sorted and free of duplicates and zeros.
class ConeVRep {
 public:
  ConeVRep() = default;
  ConeVRep(std::size_t dim, Matrix generators);

  std::size_t dim() const { return dim_; }
  const Matrix& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  friend bool operator==(const ConeVRep&, const ConeVRep&) = default;

 private:
  std::size_t dim_ = 0;
  Matrix generators_;
};

/// { x : g.x >= 0 for every g in facets }, same normalization as ConeVRep.
class ConeHRep {
 public:
  ConeHRep() = default;
  ConeHRep(std::size_t dim, Matrix functionals);

  std::size_t dim() const { return dim_; }
  const Matrix& functionals() const { return functionals_; }
  std::size_t size() const { return functionals_.size(); }

  friend bool operator==(const ConeHRep&, const ConeHRep&) = default;

 private:
  std::size_t dim_ = 0;
  Matrix functionals_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C* as an H-rep on the dual space: its constraints are the generators of C.
ConeHRep dual_vrep_to_hrep(const ConeVRep& c);

/// C* as a V-rep: generated by the bounding functionals of C.
ConeVRep dual_hrep_to_vrep(const ConeHRep& c);

/// Extreme rays by double description; the lineality space is reported
/// alongside, never dropped.
RayEnumeration enumerate_rays(const ConeHRep& c, const DoubleDescriptionOptions& options = {});

/// V-rep of the extreme rays. Throws std::domain_error if the cone is not
/// pointed (use enumerate_rays to inspect the lineality space).
ConeVRep extreme_rays(const ConeHRep& c, const DoubleDescriptionOptions& options = {});

/// Irredundant H-rep of cone(generators) (its facets). Throws
/// std::domain_error if the cone is not full-dimensional.
ConeHRep facets(const ConeVRep& c, const DoubleDescriptionOptions& options = {});

struct Membership {
  bool member = false;
  /// H-rep: a violated functional. V-rep: a separating functional y with
  /// y.g >= 0 on every generator and y.x < 0.
  std::optional<Vector> certificate;
  /// V-rep only: nonnegative combination coefficients, one per generator.
  std::optional<Vector> coefficients;
};

Membership membership(const ConeHRep& c, const Vector& x);
Membership membership(const ConeVRep& c, const Vector& x);

/// Effective dimension of { x : A x >= 0 } modulo lineality: rank A.
std::size_t constraint_rank(const ConeHRep& c);

/// True iff x is an extreme ray: x != 0 and the functionals tight at x have
/// rank equal to rank(A) - 1. Throws std::invalid_argument if x is not in c.
bool is_extreme_ray(const ConeHRep& c, const Vector& x);

/// Rank of the functionals tight at x.
std::size_t tight_rank(const ConeHRep& c, const Vector& x);

/// Kronecker product of vectors; the first factor is the most significant index.
Vector kronecker(std::span<const Vector> factors);

ConeVRep min_tensor_product(std::span<const ConeVRep> cones);
ConeHRep max_tensor_product(std::span<const ConeHRep> cones);

/// Membership in C1 (x)max ... (x)max Cn by contracting the first tensor
/// factor with each functional of C1 and recursing on the remaining factors.
bool max_product_member_by_slices(std::span<const ConeHRep> cones, const Vector& z);

/// Drops every functional that is a nonnegative combination of the others.
ConeHRep remove_redundant(const ConeHRep& c);

/// Drops every generator that is a nonnegative combination of the others.
ConeVRep remove_redundant(const ConeVRep& c);

}  // namespace bellcone
