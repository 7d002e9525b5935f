#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace snd {

/// Exact rational number of arbitrary precision.
///
/// All times, coordinates and speeds in the model are Scalars, so every
/// feasibility condition is evaluated without rounding.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p/q", "-p/q" or an integer. Throws ParseError.
  static Scalar parse(std::string_view text);

  /// Canonical text: "p" for integers, "p/q" (reduced, q > 0) otherwise.
  std::string str() const;
  /// Fixed-point decimal rendering with `digits` fractional digits (rounded toward zero).
  std::string decimal(int digits = 9) const;
  double to_double() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Scalar abs() const;

  /// Square root when this is the square of a rational, nullopt otherwise.
  std::optional<Scalar> exact_sqrt() const;
  /// Rational approximation of the square root with absolute error below 2^-bits.
  Scalar approx_sqrt(unsigned bits = 128) const;

  const mpq_class& raw() const { return value_; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

}  // namespace snd
