#include "lgm/singularity.hpp"

namespace lgm {

namespace {

void check_exponents(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) {
    throw DomainError("chain exponents must satisfy p >= 2, q >= 2 (got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q) + ")");
  }
}

std::int64_t integer_milnor_number(const Weights& w) {
  const Rational mu = milnor_number(w);
  if (!mu.is_integer()) throw ConsistencyError("Milnor number is not an integer: " + mu.str());
  return mu.numerator().get_si();
}

}  // namespace

ChainSingularity make_chain(std::int64_t p, std::int64_t q) {
  check_exponents(p, q);
  ChainSingularity s;
  s.p = p;
  s.q = q;
  s.d = gcd(p - 1, q);
  s.polynomial = TwoVarPoly::monomial({static_cast<int>(p), 0}) +
                 TwoVarPoly::monomial({1, static_cast<int>(q)});
  auto w = solve_weights(s.polynomial);
  if (!w) throw ConsistencyError("chain polynomial has no unique weights");
  s.weights = *w;
  if (s.weights.x != Rational(1, p) || s.weights.y != Rational(p - 1, p * q)) {
    throw ConsistencyError("chain weights disagree with 1/p, (p-1)/pq");
  }
  s.c_hat = central_charge(s.weights);
  s.mu = integer_milnor_number(s.weights);
  return s;
}

DualSingularity make_dual(std::int64_t p, std::int64_t q) {
  check_exponents(p, q);
  DualSingularity s;
  s.p = p;
  s.q = q;
  s.polynomial = TwoVarPoly::monomial({static_cast<int>(p), 1}) +
                 TwoVarPoly::monomial({0, static_cast<int>(q)});
  auto w = solve_weights(s.polynomial);
  if (!w) throw ConsistencyError("dual polynomial has no unique weights");
  s.weights = *w;
  s.c_hat = central_charge(s.weights);
  s.mu = integer_milnor_number(s.weights);
  return s;
}

std::pair<TwoVarPoly, TwoVarPoly> jacobian(const TwoVarPoly& w) { return {w.d_dx(), w.d_dy()}; }

TwoVarPoly hessian_det(const TwoVarPoly& w) {
  const TwoVarPoly wx = w.d_dx();
  const TwoVarPoly wy = w.d_dy();
  const TwoVarPoly wxy = wx.d_dy();
  return wx.d_dx() * wy.d_dy() - wxy * wxy;
}

std::string ade_name(std::int64_t p, std::int64_t q) {
  if (p == 3 && q == 3) return "E7";
  // x^{n-1} + x y^2
  if (q == 2 && p >= 3) return "D" + std::to_string(p + 1);
  // x^2 + x y^q = (x + y^q/2)^2 - y^{2q}/4
  if (p == 2) return "A" + std::to_string(2 * q - 1);
  return "";
}

}  // namespace lgm
