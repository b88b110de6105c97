#pragma once

#include "bellcone/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bellcone {

/// Measurement setting of one party; `none` is the do-not-measure letter 0.
enum class Setting : std::int8_t { minus = -1, none = 0, plus = 1 };

inline constexpr std::array<Setting, 3> kSettings{Setting::minus, Setting::none, Setting::plus};
inline constexpr std::array<Setting, 2> kMeasured{Setting::minus, Setting::plus};

constexpr int value(Setting s) { return static_cast<int>(s); }
constexpr std::size_t digit(Setting s) { return static_cast<std::size_t>(value(s) + 1); }
Setting setting_from_int(int v);

/// Largest party count supported by the dense layout.
inline constexpr int kMaxParties = 12;

/// Number of entries 3^n of an n-party tensor.
std::size_t tensor_size(int n);

/// A word s_1...s_n over {-1,0,+1}. Words are ordered lexicographically with
/// -1 < 0 < +1; the rank of a word in that order is its dense index.
class SettingWord {
 public:
  explicit SettingWord(std::vector<Setting> letters);
  static SettingWord from_index(int n, std::size_t index);
  static SettingWord zeros(int n) { return SettingWord(std::vector<Setting>(static_cast<std::size_t>(n), Setting::none)); }

  int parties() const { return static_cast<int>(letters_.size()); }
  Setting operator[](std::size_t j) const { return letters_[j]; }
  const std::vector<Setting>& letters() const { return letters_; }
  std::size_t index() const;

  /// True if every letter is +-1.
  bool is_full() const;

  /// `-1,0,+1`
  std::string to_string() const;
  static SettingWord parse(std::string_view text);

  friend bool operator==(const SettingWord&, const SettingWord&) = default;
  friend auto operator<=>(const SettingWord& a, const SettingWord& b) { return a.index() <=> b.index(); }

 private:
  std::vector<Setting> letters_;
};

/// Dense index of the word whose letters are given in order.
std::size_t word_index(std::span<const Setting> letters);

enum class Variance : std::uint8_t { upper, lower };

/// Dense tensor over {-1,0,+1}^n. Upper variance holds correlators (boxes),
/// lower variance holds functionals (inequalities).
template <Variance V>
class Tensor {
 public:
  static constexpr Variance variance = V;

  Tensor() = default;
  explicit Tensor(int n) : n_(n), entries_(tensor_size(n)) {}
  Tensor(int n, Vector entries);

  int parties() const { return n_; }
  std::size_t size() const { return entries_.size(); }

  const Rational& operator[](std::size_t index) const { return entries_[index]; }
  Rational& operator[](std::size_t index) { return entries_[index]; }
  const Rational& at(const SettingWord& w) const;
  Rational& at(const SettingWord& w);
  const Rational& at(std::initializer_list<int> letters) const;
  Rational& at(std::initializer_list<int> letters);

  /// Entry at the all-zero word.
  const Rational& normalization() const { return entries_[zero_index()]; }

  const Vector& entries() const { return entries_; }
  Vector& entries() { return entries_; }

  bool is_zero() const { return bellcone::is_zero(entries_); }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& c);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& c) { return a *= c; }
  friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }
  Tensor operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t zero_index() const;
  void check_same_shape(const Tensor& o) const;

  int n_ = 0;
  Vector entries_;
};

using CorrelationTensor = Tensor<Variance::upper>;
using FunctionalTensor = Tensor<Variance::lower>;

extern template class Tensor<Variance::upper>;
extern template class Tensor<Variance::lower>;

/// The index-raising / index-lowering pair. `lowered` maps boxes to
/// functionals, `raised` maps functionals back; rows and columns follow the
/// letter order -1, 0, +1.
struct FTensor {
  std::array<std::array<Rational, 3>, 3> raised;
  std::array<std::array<Rational, 3>, 3> lowered;
};

const FTensor& f_tensor();

/// Applies a 3x3 matrix on every index: out_s = prod_j M[s_j][t_j] in^t.
Vector apply_local(const Vector& entries, int n, const std::array<std::array<Rational, 3>, 3>& m);

FunctionalTensor lower(const CorrelationTensor& x);
CorrelationTensor raise(const FunctionalTensor& f);

/// f_s x^s. Throws std::invalid_argument on a party-count mismatch.
Rational pair(const FunctionalTensor& f, const CorrelationTensor& x);

/// Ray-normalized copy (see canonical_ray).
template <Variance V>
Tensor<V> canonical_ray(const Tensor<V>& t) {
  return Tensor<V>(t.parties(), canonical_ray(t.entries()));
}

/// Tensor product a (x) b; the parties of `a` come first.
template <Variance V>
Tensor<V> tensor_product(const Tensor<V>& a, const Tensor<V>& b);

/// The n-party slice with the last party's letter fixed to `last`.
template <Variance V>
Tensor<V> slice_last(const Tensor<V>& t, Setting last);

/// Inverse of slice_last: z^{s,-1}, z^{s,0}, z^{s,+1} from three n-party tensors.
template <Variance V>
Tensor<V> append_party(const Tensor<V>& minus, const Tensor<V>& none, const Tensor<V>& plus);

}  // namespace bellcone
