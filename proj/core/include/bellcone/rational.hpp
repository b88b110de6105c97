#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bellcone {

using Integer = mpz_class;

/// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}
  Rational(long value) : value_(value) {}
  Rational(long long value) : value_(static_cast<long>(value)) {}
  Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses `p/q` or `p` (optional leading sign). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational abs() const;

  /// `p/q`, or `p` when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

/// Exact dot product; throws std::invalid_argument on length mismatch.
Rational dot(const Vector& a, const Vector& b);

/// Lexicographic comparison by value; shorter vectors order first on a tie.
std::strong_ordering compare_vectors(const Vector& a, const Vector& b);

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const { return compare_vectors(a, b) < 0; }
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const;
};

/// Canonical representative of the ray {c v : c > 0}: positive rescaling to
/// coprime integer entries. The zero vector is returned unchanged.
Vector canonical_ray(const Vector& v);

/// Canonical representative of the line spanned by `v`: canonical_ray with
/// the first nonzero entry made positive.
Vector canonical_line(const Vector& v);

bool is_zero(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace bellcone

template <>
struct std::hash<bellcone::Rational> {
  std::size_t operator()(const bellcone::Rational& r) const { return r.hash(); }
};
