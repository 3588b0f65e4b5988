#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wtrace {

/// Raised on division by zero and malformed rational literals.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number over arbitrary-precision integers.
///
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
/// Serialized as "p/q", or "p" when q = 1; the sign lives on the numerator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" (whitespace not allowed). Throws ArithmeticError.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

/// a^e for integer base and nonnegative exponent.
Rational power(const Rational& base, unsigned exponent);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(long n, long k);

Rational factorial(unsigned n);

}  // namespace wtrace
