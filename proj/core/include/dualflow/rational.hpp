#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dualflow {

/// Exact rational number in canonical form (positive denominator, coprime
/// numerator and denominator, zero stored as 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "P" or "P/Q" with optional leading sign on P. Throws
  /// Error(ErrorCode::SyntaxError) on malformed text and
  /// Error(ErrorCode::ValidationError) on a zero or negative denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  std::string numerator() const;
  std::string denominator() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const;

  /// "P" for integers, "P/Q" otherwise.
  std::string str() const;
  /// Always "P/Q", denominators of 1 included.
  std::string fraction_str() const;

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dualflow

template <>
struct std::hash<dualflow::Rational> {
  std::size_t operator()(const dualflow::Rational& r) const noexcept { return r.hash(); }
};
