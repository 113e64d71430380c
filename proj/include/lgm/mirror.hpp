// Mirror isomorphism between the FJRW ring of x^p + x y^q and the Milnor ring
// of its transpose x^p y + y^q.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/amodel.hpp"
#include "lgm/arith.hpp"
#include "lgm/bmodel.hpp"
#include "lgm/check.hpp"
#include "lgm/linalg.hpp"
#include "lgm/polynomial.hpp"

namespace lgm {

/// e_k and e_m generate the A-model ring; X and Y map to them.
struct GeneratorPair {
  std::int64_t k_index = 0;  // 0 means the broad element (p == 2)
  std::int64_t m_index = 0;
  LinearCombination x_image;  // F(X); -q * broad when p == 2
  LinearCombination y_image;  // F(Y) = e_m
};

/// d == 1: M solves (p - 1) M = 1 mod pq, k = pq + 1 - M, m = M + 2.
/// d > 1:  k = p - 2, m = 2p - 1.
/// Postconditions deg X = (q - 1)/pq and deg Y = 1/q are enforced.
GeneratorPair find_generators(const StateSpace& space);

/// (s, t) -> sector index with e_{f(s,t)} = e_k^s * e_m^t, on
/// 0 <= s <= p - 2, 0 <= t <= q - 1.
class IndexBijection {
 public:
  IndexBijection(const ChainSingularity& s, const GeneratorPair& gens);

  std::int64_t operator()(int s, int t) const { return forward_.at({s, t}); }
  std::pair<int, int> preimage(std::int64_t k) const { return inverse_.at(k); }
  const std::map<std::pair<int, int>, std::int64_t>& forward() const { return forward_; }
  std::size_t size() const { return forward_.size(); }

 private:
  std::map<std::pair<int, int>, std::int64_t> forward_;
  std::map<std::int64_t, std::pair<int, int>> inverse_;
};

/// Everything needed to compare both sides for one (p, q).
struct MirrorSetup {
  ChainSingularity chain;
  DualSingularity dual;
  FrobeniusAlgebra algebra;
  MilnorRing dual_ring;
  GeneratorPair generators;
};

MirrorSetup make_mirror_setup(std::int64_t p, std::int64_t q);

/// Ring map F: Q_{dual} -> H_{W, G_max}, F(x^s y^t) = F(X)^s * F(Y)^t.
class MirrorMap {
 public:
  explicit MirrorMap(const MirrorSetup& setup);

  LinearCombination image(Monomial m) const;
  LinearCombination image(const TwoVarPoly& f) const;
  /// Images of the Milnor basis, in basis order.
  const std::vector<LinearCombination>& basis_images() const { return basis_images_; }

 private:
  const MirrorSetup* setup_;
  std::vector<LinearCombination> x_powers_;
  std::vector<LinearCombination> y_powers_;
  std::vector<LinearCombination> basis_images_;
};

struct RelationReport {
  LinearCombination first;   // F(X)^{p-1} * F(Y)
  LinearCombination second;  // F(X)^p + q F(Y)^{q-1}
  bool holds() const { return first.is_zero() && second.is_zero(); }
};

RelationReport verify_relations(const MirrorSetup& setup);

struct MirrorReport {
  std::size_t state_dim = 0;
  std::size_t milnor_dim = 0;
  std::size_t image_rank = 0;
  std::size_t products_checked = 0;
  std::size_t product_mismatches = 0;
  std::string first_mismatch;
  RelationReport relations;

  bool isomorphism() const {
    return state_dim == milnor_dim && image_rank == state_dim && product_mismatches == 0 && relations.holds();
  }
};

/// Dimension, rank of the basis images and F(NF(uv)) == F(u) * F(v) on all
/// basis pairs.
MirrorReport verify_isomorphism(const MirrorSetup& setup);

/// Residue Gram matrix against eta pulled back along F. Diagnostic only:
/// a rescaling X -> aX, Y -> bY compatible with the relations is searched.
struct PairingComparison {
  SparseMatrix residue_gram{0, 0};
  SparseMatrix pulled_gram{0, 0};
  bool same_support = false;
  std::optional<Rational> ratio;  // residue / pulled, when constant
  std::optional<std::pair<Rational, Rational>> rescaling;  // (a, b) making them equal
};

PairingComparison compare_pairings(const MirrorSetup& setup);

/// e_{f(s,t)} == F(X)^s * F(Y)^t on the whole domain (p >= 3), plus
/// bijectivity onto the sectors.
CheckResult check_bijection(const MirrorSetup& setup);
/// span{x^s y^t : s <= p - 2, t <= q - 1} + x^{p-1} is all of the dual Milnor ring.
CheckResult check_dual_monomial_span(const MirrorSetup& setup);
/// eta(broad, broad) == Res(y^{2q-2}) on the Milnor ring of W.
CheckResult check_broad_residue(const MirrorSetup& setup);
CheckResult check_relations(const MirrorSetup& setup);
CheckResult check_isomorphism(const MirrorSetup& setup);

/// Every A-model, B-model and mirror check for (p, q).
std::vector<CheckResult> verify_all(const MirrorSetup& setup);
std::vector<CheckResult> verify_all(std::int64_t p, std::int64_t q);

}  // namespace lgm
