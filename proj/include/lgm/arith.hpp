// Exact rational arithmetic and small number-theory helpers.
//
// Every scalar in the library is a Rational: weights, central charges,
// sector phases, degree shifts, correlator values and pairing entries.
// There is no floating point anywhere.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lgm {

using BigInt = mpz_class;

/// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(const BigInt& v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "a/b" or "a". Throws std::invalid_argument on malformed text or b == 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= *this.
  BigInt floor() const;

  /// Canonical "num/den" rendering, e.g. "-1/3", "4/1".
  std::string str() const;
  /// Compact rendering for human-facing text: "4" instead of "4/1".
  std::string pretty() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r - floor(r); always in [0, 1).
Rational frac_part(const Rational& r);

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

/// Non-negative gcd; gcd(0, 0) == 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Least x in [0, n) with a*x == b (mod n), or nullopt when gcd(a, n) does not
/// divide b. Requires n >= 1 (std::invalid_argument otherwise).
std::optional<std::int64_t> solve_congruence(std::int64_t a, std::int64_t b, std::int64_t n);

/// Mathematical modulo: result in [0, n) for n > 0.
std::int64_t mod(std::int64_t a, std::int64_t n);

/// Exact e-th root of a non-negative rational when it is a perfect power.
std::optional<Rational> exact_root(const Rational& r, unsigned e);

}  // namespace lgm
