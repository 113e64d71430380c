#include "lgm/arith.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lgm {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t\n") - first + 1);
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational::parse: bad integer");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Rational::parse: bad integer");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return v_.get_num().get_str();
  return str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational frac_part(const Rational& r) { return r - Rational(r.floor()); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::optional<std::int64_t> solve_congruence(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("solve_congruence: modulus must be >= 1");
  a = mod(a, n);
  b = mod(b, n);
  const std::int64_t g = std::gcd(a, n);  // gcd(0, n) == n
  if (b % g != 0) return std::nullopt;

  // Inverse of a/g modulo n/g; any x works when n/g == 1.
  const BigInt n_red(static_cast<long>(n / g));
  BigInt inv(1);
  if (n_red != 1) mpz_invert(inv.get_mpz_t(), BigInt(static_cast<long>(a / g)).get_mpz_t(), n_red.get_mpz_t());
  BigInt x = BigInt(static_cast<long>(b / g)) * inv % n_red;
  if (x < 0) x += n_red;
  const auto result = static_cast<std::int64_t>(x.get_si());

  if (BigInt(static_cast<long>(a)) * BigInt(static_cast<long>(result)) % BigInt(static_cast<long>(n)) != b) {
    throw std::logic_error("solve_congruence: substitution check failed");
  }
  return result;
}

std::optional<Rational> exact_root(const Rational& r, unsigned e) {
  if (e == 0 || r.sign() < 0) return std::nullopt;
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  BigInt num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), e) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), e) == 0) return std::nullopt;
  return Rational(num_root, den_root);
}

}  // namespace lgm
