#pragma once

#include "bellcone/linalg.hpp"

#include <cstddef>
#include <functional>

namespace bellcone {

/// Extreme rays of { x : A x >= 0 } together with a basis of its lineality
/// space ker A. Rays are taken inside the row space of A, so they are unique
/// up to positive scaling even when the lineality space is nontrivial.
struct RayEnumeration {
  Matrix rays;
  Matrix lineality;
  bool pointed() const { return lineality.empty(); }
};

struct DoubleDescriptionOptions {
  /// Called after each inserted constraint with (inserted, total, current ray count).
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

/// Incremental double description. Constraints after the initial simplicial
/// cone are inserted in increasing order of how many initial rays they cut
/// off; adjacency uses saturation-set inclusion. Output rays are
/// ray-normalized and sorted.
RayEnumeration double_description(const Matrix& constraints, std::size_t dim,
                                  const DoubleDescriptionOptions& options = {});

}  // namespace bellcone
