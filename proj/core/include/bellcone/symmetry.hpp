#pragma once

#include "bellcone/cone.hpp"
#include "bellcone/tensor.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bellcone {

/// Signed permutation of the 3^n tensor entries: entry i moves to target[i]
/// and is multiplied by sign[i].
struct SignedPermutation {
  std::vector<std::uint32_t> target;
  std::vector<std::int8_t> sign;

  Vector apply(const Vector& v) const;
};

/// Scenario symmetry in normal form: per party j, first exchange the two
/// settings if swap[j], then negate the observables selected by flip[j]
/// (indexed by the post-swap letter, 0 for -1 and 1 for +1), then move the
/// party to position perm[j]. The letter 0 is never moved or signed.
class SymmetryElement {
 public:
  static SymmetryElement identity(int n);
  static SymmetryElement party_transposition(int n, int i, int j);
  static SymmetryElement setting_swap(int n, int party);
  static SymmetryElement outcome_flip(int n, int party, Setting observable);
  static SymmetryElement global_setting_swap(int n);
  static SymmetryElement global_outcome_flip(int n);

  SymmetryElement(std::vector<int> perm, std::vector<bool> swap, std::vector<std::array<bool, 2>> flip);

  int parties() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<bool>& swap() const { return swap_; }
  const std::vector<std::array<bool, 2>>& flip() const { return flip_; }

  bool is_identity() const;
  bool has_party_permutation() const;

  SignedPermutation table() const;

  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
  friend auto operator<=>(const SymmetryElement&, const SymmetryElement&) = default;

  /// Atom list, e.g. `perm(1,2),swap(1),flip(2,+1)`; `id` for the identity.
  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<bool> swap_;
  std::vector<std::array<bool, 2>> flip_;
};

/// a o b: apply b first, then a.
SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);
SymmetryElement inverse(const SymmetryElement& a);

template <Variance V>
Tensor<V> act(const SymmetryElement& g, const Tensor<V>& t) {
  if (g.parties() != t.parties()) throw std::invalid_argument("act: party counts differ");
  return Tensor<V>(t.parties(), g.table().apply(t.entries()));
}

/// The element g' with lower(act(g, x)) = act(g', lower(x)) for every box x.
SymmetryElement induced_on_functionals(const SymmetryElement& g);

/// Parses a comma-separated atom list: `id`, `swap(j)`, `flip(j,-1)`,
/// `flip(j,+1)`, `flip(j)` (both observables), `perm(i,j)`; `j` may be `*`
/// for every party. Parties are 1-based. Atoms act in reading order.
SymmetryElement parse_symmetry(std::string_view text, int n);

/// An element with g o g = id, checked on construction.
class Involution {
 public:
  explicit Involution(SymmetryElement g);
  static Involution identity(int n) { return Involution(SymmetryElement::identity(n)); }
  static Involution parse(std::string_view text, int n) { return Involution(parse_symmetry(text, n)); }

  const SymmetryElement& element() const { return g_; }
  int parties() const { return g_.parties(); }

  template <Variance V>
  Tensor<V> operator()(const Tensor<V>& t) const {
    return act(g_, t);
  }

 private:
  SymmetryElement g_;
};

/// Explicitly enumerated symmetry group with cached entry tables.
class SymmetryGroup {
 public:
  /// Full group of order n! 2^n 4^n.
  static SymmetryGroup full(int n);
  /// Setting swaps and outcome flips only, order 2^n 4^n.
  static SymmetryGroup without_party_permutations(int n);

  int parties() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SymmetryElement>& elements() const { return elements_; }
  const std::vector<SignedPermutation>& tables() const { return tables_; }

 private:
  SymmetryGroup(int n, bool with_perms);
  int n_;
  std::vector<SymmetryElement> elements_;
  std::vector<SignedPermutation> tables_;
};

struct OrbitForm {
  Vector canonical;
  std::size_t stabilizer_order = 0;
};

/// Minimum over the group of the ray-normalized images of `v`, under the
/// lexicographic order of entries. Throws std::invalid_argument on zero input.
OrbitForm orbit_canonical_form(const Vector& v, const SymmetryGroup& group);

template <Variance V>
OrbitForm orbit_canonical_form(const Tensor<V>& t, const SymmetryGroup& group) {
  return orbit_canonical_form(t.entries(), group);
}

struct Orbit {
  Vector representative;
  /// Number of classified rays in this orbit.
  std::size_t size = 0;
  /// Length of the whole group orbit; equals `size` when the ray set is
  /// closed under the group.
  std::size_t full_size = 0;
  /// Indices into the classified ray list.
  std::vector<std::size_t> members;
};

/// Partitions a set of rays into orbits; the representative of each orbit is
/// its canonical form and orbits are sorted by representative.
std::vector<Orbit> classify_orbits(const ConeVRep& rays, const SymmetryGroup& group);
std::vector<Orbit> classify_orbits(const Matrix& rays, const SymmetryGroup& group);

}  // namespace bellcone
