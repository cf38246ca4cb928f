#pragma once

// Exact integer and rational arithmetic. Every comparison against a square
// root is decided by clearing denominators and comparing integer squares.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seshadri {

using Integer = mpz_class;

// Raised when an argument lies outside the mathematical domain of an
// operation (negative radicand, zero denominator, square input to Pell).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a constructor's stated hypotheses do not hold. `condition()`
// names the violated hypothesis so callers can report it verbatim.
class PreconditionViolation : public std::invalid_argument {
 public:
  explicit PreconditionViolation(std::string condition)
      : std::invalid_argument("precondition violated: " + condition),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T v) : num_(static_cast<long>(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer num, Integer den);

  // Accepts "p", "-p", "p/q". Throws DomainError on malformed text.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_integer() const noexcept { return den_ == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;

  Rational operator-() const { return Rational(-num_, den_, Normalized{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  // Display-only decimal with `digits` fractional digits, round-half-even.
  std::string to_decimal(int digits = 6) const;

  double to_double() const;

 private:
  struct Normalized {};
  Rational(Integer num, Integer den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// floor(sqrt(x)) by Newton iteration. Throws DomainError for x < 0.
Integer isqrt(const Integer& x);

// ceil(sqrt(x)). Throws DomainError for x < 0.
Integer ceil_sqrt(const Integer& x);

bool is_perfect_square(const Integer& x);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

// Sign of p/q - sqrt(m), for q > 0 and m >= 0.
int cmp_ratio_vs_sqrt(const Integer& p, const Integer& q, const Integer& m);

// Sign of v - sqrt(radicand), for radicand >= 0.
int cmp_rational_vs_sqrt(const Rational& v, const Rational& radicand);

// Least integer k with sqrt(a_num/a_den) < k < sqrt(b_num/b_den), if any.
// Radicands must be nonnegative and the denominators positive.
std::optional<Integer> integer_in_open_sqrt_interval(const Integer& a_num, const Integer& a_den,
                                                     const Integer& b_num, const Integer& b_den);

// Smallest p/q > sqrt(radicand) with 1 <= q <= max_den (Stern-Brocot descent).
Rational smallest_rational_above_sqrt(const Rational& radicand, const Integer& max_den);

// Smallest p/q > x with 1 <= q <= max_den, for x >= 0.
Rational smallest_rational_above(const Rational& x, const Integer& max_den);

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& v);

}  // namespace seshadri
