// Milnor ring Q_f = Q[x, y] / (f_x, f_y) of a quasi-homogeneous isolated
// singularity, with its residue pairing.
//
// The residue is fixed by the socle normalization Res(hess f) = mu: it is the
// linear functional that reads the coefficient of the single top-degree
// standard monomial in the normal form and rescales it.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lgm/arith.hpp"
#include "lgm/check.hpp"
#include "lgm/linalg.hpp"
#include "lgm/polynomial.hpp"
#include "lgm/singularity.hpp"

namespace lgm {

/// Weighted-degree order with x > y as the tie-break.
class MonomialOrder {
 public:
  explicit MonomialOrder(const Weights& w);
  bool less(Monomial a, Monomial b) const;
  /// Weighted degree scaled to an integer.
  long scaled_degree(Monomial m) const { return wx_ * m.x + wy_ * m.y; }
  Monomial leading(const TwoVarPoly& f) const;  // f != 0

 private:
  long wx_ = 1;
  long wy_ = 1;
};

/// Thrown when the Jacobian ideal has infinite colength.
class NonIsolatedSingularity : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Reduced, monic Groebner basis of (f_x, f_y), sorted by ascending leading
/// monomial. Throws DomainError without unique positive weights and
/// NonIsolatedSingularity when the quotient is infinite-dimensional.
std::vector<TwoVarPoly> reduce_ideal(const TwoVarPoly& f);

class MilnorRing {
 public:
  explicit MilnorRing(TwoVarPoly f);

  const TwoVarPoly& polynomial() const { return f_; }
  const Weights& weights() const { return weights_; }
  Rational c_hat() const { return central_charge(weights_); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<TwoVarPoly>& ideal_basis() const { return ideal_; }

  /// Standard monomials ordered by weighted degree, then x-power.
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t mu() const { return basis_.size(); }
  std::optional<std::size_t> basis_index(Monomial m) const;

  Monomial top_monomial() const { return top_; }
  /// c with normal_form(hess f) = c * top_monomial.
  const Rational& residue_norm() const { return hess_coeff_; }

  TwoVarPoly normal_form(const TwoVarPoly& g) const;
  /// normal_form(g) expressed in basis indices.
  LinearCombination coordinates(const TwoVarPoly& g) const;
  TwoVarPoly multiply(const TwoVarPoly& a, const TwoVarPoly& b) const { return normal_form(a * b); }

  Rational residue(const TwoVarPoly& g) const;
  /// G_uv = residue(m_u m_v) over the standard-monomial basis.
  SparseMatrix gram_matrix() const;

 private:
  TwoVarPoly f_;
  Weights weights_;
  MonomialOrder order_;
  std::vector<TwoVarPoly> ideal_;
  std::vector<Monomial> basis_;
  Monomial top_;
  Rational hess_coeff_;
};

/// mu equals prod(1/w_i - 1).
CheckResult check_milnor_dimension(const MilnorRing& ring);
/// Basis monomials are fixed points of normal_form; normal_form(normal_form(g)) == normal_form(g).
CheckResult check_normal_form(const MilnorRing& ring);
/// residue(hess) == mu, and residue(m * f_x) == residue(m * f_y) == 0.
CheckResult check_residue(const MilnorRing& ring);
/// Gram matrix symmetric, graded and nondegenerate.
CheckResult check_gram(const MilnorRing& ring);

std::vector<CheckResult> bmodel_checks(const MilnorRing& ring);

}  // namespace lgm
