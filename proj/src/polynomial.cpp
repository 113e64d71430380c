#include "lgm/polynomial.hpp"

#include <vector>

namespace lgm {

std::string monomial_label(Monomial m) {
  if (m.x == 0 && m.y == 0) return "1";
  std::string out;
  if (m.x > 0) out += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) {
    if (!out.empty()) out += ' ';
    out += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  }
  return out;
}

Rational weighted_degree(Monomial m, const Weights& w) {
  return Rational(m.x) * w.x + Rational(m.y) * w.y;
}

TwoVarPoly TwoVarPoly::constant(const Rational& c) { return monomial({0, 0}, c); }

TwoVarPoly TwoVarPoly::monomial(Monomial m, const Rational& c) {
  TwoVarPoly p;
  p.add_term(m, c);
  return p;
}

Rational TwoVarPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TwoVarPoly::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TwoVarPoly& TwoVarPoly::operator+=(const TwoVarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TwoVarPoly& TwoVarPoly::operator-=(const TwoVarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TwoVarPoly& TwoVarPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b) {
  TwoVarPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

TwoVarPoly TwoVarPoly::d_dx() const {
  TwoVarPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) out.add_term({m.x - 1, m.y}, c * Rational(m.x));
  }
  return out;
}

TwoVarPoly TwoVarPoly::d_dy() const {
  TwoVarPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) out.add_term({m.x, m.y - 1}, c * Rational(m.y));
  }
  return out;
}

std::string TwoVarPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    if (m.x > 0) vars += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
    if (m.y > 0) {
      if (!vars.empty()) vars += "*";
      vars += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
    }
    if (vars.empty()) {
      out += mag.pretty();
    } else if (mag == Rational(1)) {
      out += vars;
    } else {
      out += mag.pretty() + "*" + vars;
    }
  }
  return out;
}

std::optional<Weights> solve_weights(const TwoVarPoly& f) {
  std::vector<Monomial> ms;
  for (const auto& [m, c] : f.terms()) ms.push_back(m);
  // Find two monomials with independent exponent vectors and apply Cramer.
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const long det = static_cast<long>(ms[i].x) * ms[j].y - static_cast<long>(ms[i].y) * ms[j].x;
      if (det == 0) continue;
      const Weights w{Rational(ms[j].y - ms[i].y, det), Rational(ms[i].x - ms[j].x, det)};
      if (w.x.sign() <= 0 || w.y.sign() <= 0) return std::nullopt;
      if (!is_quasi_homogeneous(f, w)) return std::nullopt;
      return w;
    }
  }
  return std::nullopt;
}

bool is_quasi_homogeneous(const TwoVarPoly& f, const Weights& w) {
  for (const auto& [m, c] : f.terms()) {
    if (weighted_degree(m, w) != Rational(1)) return false;
  }
  return !f.is_zero();
}

Rational central_charge(const Weights& w) {
  return (Rational(1) - Rational(2) * w.x) + (Rational(1) - Rational(2) * w.y);
}

Rational milnor_number(const Weights& w) {
  return (Rational(1) / w.x - Rational(1)) * (Rational(1) / w.y - Rational(1));
}

}  // namespace lgm
