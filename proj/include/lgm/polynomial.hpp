// Sparse polynomials in two variables x, y with rational coefficients.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "lgm/arith.hpp"

namespace lgm {

struct Monomial {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(Monomial a, Monomial b) { return {a.x + b.x, a.y + b.y}; }
  bool divides(Monomial other) const { return x <= other.x && y <= other.y; }
};

/// "1", "x", "y^2", "x^2 y": the label style used in reports.
std::string monomial_label(Monomial m);

struct Weights {
  Rational x;
  Rational y;
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Weighted degree a*w_x + b*w_y.
Rational weighted_degree(Monomial m, const Weights& w);

class TwoVarPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  TwoVarPoly() = default;
  static TwoVarPoly constant(const Rational& c);
  static TwoVarPoly monomial(Monomial m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(Monomial m) const;
  void add_term(Monomial m, const Rational& c);

  TwoVarPoly& operator+=(const TwoVarPoly& o);
  TwoVarPoly& operator-=(const TwoVarPoly& o);
  TwoVarPoly& operator*=(const Rational& c);
  friend TwoVarPoly operator+(TwoVarPoly a, const TwoVarPoly& b) { return a += b; }
  friend TwoVarPoly operator-(TwoVarPoly a, const TwoVarPoly& b) { return a -= b; }
  friend TwoVarPoly operator*(TwoVarPoly a, const Rational& c) { return a *= c; }
  friend TwoVarPoly operator*(const Rational& c, TwoVarPoly a) { return a *= c; }
  friend TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b);
  friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

  TwoVarPoly d_dx() const;
  TwoVarPoly d_dy() const;

  /// Canonical text: terms sorted by descending x exponent, then descending y
  /// ("x^3 + x*y^2", "12*x^2 - 4*y^2", "0").
  std::string str() const;

 private:
  TermMap terms_;  // no stored zeros
};

/// The unique weights with a*w_x + b*w_y = 1 for every monomial, when the
/// exponent matrix determines them and they are positive; nullopt otherwise.
std::optional<Weights> solve_weights(const TwoVarPoly& f);

bool is_quasi_homogeneous(const TwoVarPoly& f, const Weights& w);

/// Sum of (1 - 2 w_i).
Rational central_charge(const Weights& w);
/// Product of (1/w_i - 1).
Rational milnor_number(const Weights& w);

}  // namespace lgm
