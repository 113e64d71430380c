// FJRW side: state space of (W, G_max) for the chain W = x^p + x y^q, genus-0
// three-point correlators, the pairing and the quantum product.
//
// Basis order is fixed everywhere: the broad element y^{q-1} e_0 first, then
// the narrow e_k for k in Lambda = {1 <= k < pq : p does not divide k},
// ascending.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgm/arith.hpp"
#include "lgm/check.hpp"
#include "lgm/linalg.hpp"
#include "lgm/singularity.hpp"

namespace lgm {

/// Twisted sector attached to J^k (d == 1) or lambda^k (d > 1).
struct Sector {
  std::int64_t k = 0;
  Rational theta_x;
  Rational theta_y;
  Rational iota;       // theta_x - q_x + theta_y - q_y
  bool narrow = false;
  int fixed_dim = 0;   // N_gamma: number of coordinates fixed by the group element
};

Sector make_sector(const ChainSingularity& s, std::int64_t k);

struct BasisElement {
  std::int64_t sector = 0;  // 0 is the broad element y^{q-1} e_0
  Rational degree;          // deg_C

  bool broad() const { return sector == 0; }
  /// "broad" or "e<k>".
  std::string label() const;
};

class StateSpace {
 public:
  explicit StateSpace(ChainSingularity s);

  const ChainSingularity& singularity() const { return s_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& operator[](std::size_t i) const { return basis_.at(i); }
  const Sector& sector(std::size_t i) const { return sectors_.at(i); }

  std::optional<std::size_t> find_sector(std::int64_t k) const;
  /// Basis index of e_k (k == 0 gives the broad element); throws std::out_of_range.
  std::size_t index_of(std::int64_t k) const;

  /// Unique degree-0 basis element.
  std::size_t unit_index() const { return unit_; }
  /// Basis indices whose degree equals `degree`, ascending.
  std::span<const std::size_t> with_degree(const Rational& degree) const;

 private:
  ChainSingularity s_;
  std::vector<BasisElement> basis_;
  std::vector<Sector> sectors_;
  std::vector<std::int64_t> position_;  // sector k -> basis index or -1
  std::map<Rational, std::vector<std::size_t>> by_degree_;
  std::size_t unit_ = 0;
};

StateSpace build_state_space(const ChainSingularity& s);

/// Sector of the unit: 1 when d == 1, p - 1 when d > 1.
std::int64_t expected_unit_sector(const ChainSingularity& s);

/// Genus-0 degrees (deg|L_x|, deg|L_y|) = (q_j (k - 2) - sum Theta_j) for the
/// given sector list. Integrality is not enforced.
std::pair<Rational, Rational> line_bundle_degrees(const ChainSingularity& s,
                                                  std::span<const std::int64_t> sectors);

enum class CorrelatorRule {
  ZeroByDegree,       // degree selection sum deg = c_hat fails
  ZeroByIntegrality,  // line-bundle degrees not integral
  Concavity,          // all narrow, degrees (-1,-1): value 1
  IndexZero,          // all narrow, degrees (-2,0): value -q
  BroadPairing,       // <unit, broad, broad> = -1/q
  BroadChannel,       // <e_i, e_j, broad> = +1
  ZeroOther,
};

std::string_view rule_name(CorrelatorRule r);

struct Correlator3 {
  std::array<std::size_t, 3> insertions{};  // basis indices
  Rational value;
  CorrelatorRule rule = CorrelatorRule::ZeroOther;
};

/// <a, b, c>_0 by the four-case decision procedure.
Correlator3 correlator3(const StateSpace& space, std::size_t a, std::size_t b, std::size_t c);

/// eta from the closed form: 1 on narrow pairs summing to pq, -1/q on
/// (broad, broad), 0 elsewhere.
SparseMatrix pairing(const StateSpace& space);

struct StructureConstant {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  Rational value;
};

class FrobeniusAlgebra {
 public:
  explicit FrobeniusAlgebra(StateSpace space);

  const StateSpace& space() const { return space_; }
  const ChainSingularity& singularity() const { return space_.singularity(); }
  std::size_t dimension() const { return space_.size(); }
  std::size_t unit_index() const { return space_.unit_index(); }
  const SparseMatrix& eta() const { return eta_; }
  const SparseMatrix& eta_inverse() const { return eta_inv_; }

  /// e_a * e_b = sum <a, b, alpha> eta^{alpha beta} e_beta.
  LinearCombination product(std::size_t a, std::size_t b) const;
  LinearCombination multiply(const LinearCombination& u, const LinearCombination& v) const;
  LinearCombination power(const LinearCombination& u, unsigned n) const;
  LinearCombination unit() const { return LinearCombination::basis(unit_index()); }
  Rational pair(const LinearCombination& u, const LinearCombination& v) const;

  /// Nonzero correlators with a <= b <= c, in lexicographic order.
  std::vector<Correlator3> nonzero_correlators() const;
  /// Nonzero coefficients of e_a * e_b, sorted by (a, b, c).
  std::vector<StructureConstant> structure_constants() const;

 private:
  LinearCombination compute_product(std::size_t a, std::size_t b) const;

  StateSpace space_;
  SparseMatrix eta_;
  SparseMatrix eta_inv_;
  std::vector<LinearCombination> table_;  // n*n cache, empty when too large
};

/// deg e_alpha + deg e_{pq - alpha} = c_hat and 2 deg(broad) = c_hat.
CheckResult check_degree_duality(const StateSpace& space);
/// eta_{ab} == <unit, a, b> entrywise; eta symmetric and nondegenerate.
CheckResult check_pairing(const FrobeniusAlgebra& alg);
CheckResult check_commutativity(const FrobeniusAlgebra& alg);
CheckResult check_associativity(const FrobeniusAlgebra& alg);
CheckResult check_unit(const FrobeniusAlgebra& alg);
/// eta(a*b, c) == eta(a, b*c).
CheckResult check_frobenius(const FrobeniusAlgebra& alg);
/// Nonzero coefficient of e_c in e_a*e_b implies deg a + deg b = deg c.
CheckResult check_grading(const FrobeniusAlgebra& alg);
/// For narrow i, j at most one narrow alpha has <e_i, e_j, e_alpha> != 0.
CheckResult check_uniqueness(const FrobeniusAlgebra& alg);

std::vector<CheckResult> amodel_checks(const FrobeniusAlgebra& alg);

}  // namespace lgm
