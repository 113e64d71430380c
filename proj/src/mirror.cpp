#include "lgm/mirror.hpp"

#include <algorithm>
#include <array>

namespace lgm {

namespace {

std::string pair_label(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

std::string describe(const LinearCombination& v, const StateSpace& space) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += c.pretty() + "*" + space[i].label();
  }
  return out;
}

}  // namespace

GeneratorPair find_generators(const StateSpace& space) {
  const ChainSingularity& s = space.singularity();
  const std::int64_t n = s.order();
  GeneratorPair gens;
  if (s.coprime()) {
    const auto M = solve_congruence(s.p - 1, 1, n);
    if (!M) throw ConsistencyError("p - 1 is not invertible mod pq although d == 1");
    gens.k_index = mod(n + 1 - *M, n);
    gens.m_index = mod(*M + 2, n);
  } else {
    gens.k_index = s.p - 2;
    gens.m_index = 2 * s.p - 1;
  }

  const auto k = space.find_sector(gens.k_index);
  const auto m = space.find_sector(gens.m_index);
  if (!k || !m || space[*m].broad()) {
    throw ConsistencyError("generator sectors e" + std::to_string(gens.k_index) + ", e" +
                           std::to_string(gens.m_index) + " missing from the state space");
  }
  if (space[*k].broad() != (s.p == 2)) throw ConsistencyError("X generator broad iff p == 2");

  const Rational deg_x(s.q - 1, n);
  const Rational deg_y(1, s.q);
  if (space[*k].degree != deg_x || space[*m].degree != deg_y) {
    throw ConsistencyError("generator degrees differ from the dual weights");
  }
  gens.x_image = LinearCombination::basis(*k, s.p == 2 ? Rational(-s.q) : Rational(1));
  gens.y_image = LinearCombination::basis(*m);
  return gens;
}

IndexBijection::IndexBijection(const ChainSingularity& s, const GeneratorPair& gens) {
  const std::int64_t n = s.order();
  for (int a = 0; a <= s.p - 2; ++a) {
    for (int b = 0; b <= s.q - 1; ++b) {
      const std::int64_t k = s.coprime() ? mod(1 + a * (gens.k_index - 1) + b * (gens.m_index - 1), n)
                                         : mod(s.p - 1 - a + b * s.p, n);
      if (k == 0 || k % s.p == 0) {
        throw ConsistencyError("index map sends " + pair_label(a, b) + " outside the narrow sectors");
      }
      if (!inverse_.emplace(k, std::pair{a, b}).second) {
        throw ConsistencyError("index map not injective at " + pair_label(a, b));
      }
      forward_[{a, b}] = k;
    }
  }
  if (static_cast<std::int64_t>(forward_.size()) != n - s.q) {
    throw ConsistencyError("index map does not cover the narrow sectors");
  }
}

MirrorSetup make_mirror_setup(std::int64_t p, std::int64_t q) {
  ChainSingularity chain = make_chain(p, q);
  DualSingularity dual = make_dual(p, q);
  FrobeniusAlgebra algebra{StateSpace(chain)};
  MilnorRing ring(dual.polynomial);
  GeneratorPair gens = find_generators(algebra.space());
  return MirrorSetup{std::move(chain), std::move(dual), std::move(algebra), std::move(ring), std::move(gens)};
}

MirrorMap::MirrorMap(const MirrorSetup& setup) : setup_(&setup) {
  const FrobeniusAlgebra& alg = setup.algebra;
  x_powers_.push_back(alg.unit());
  y_powers_.push_back(alg.unit());
  for (std::int64_t i = 0; i < setup.chain.p; ++i) {
    x_powers_.push_back(alg.multiply(x_powers_.back(), setup.generators.x_image));
  }
  for (std::int64_t i = 0; i < setup.chain.q; ++i) {
    y_powers_.push_back(alg.multiply(y_powers_.back(), setup.generators.y_image));
  }
  for (Monomial m : setup.dual_ring.basis()) basis_images_.push_back(image(m));
}

LinearCombination MirrorMap::image(Monomial m) const {
  const FrobeniusAlgebra& alg = setup_->algebra;
  const auto xs = static_cast<std::size_t>(m.x), ys = static_cast<std::size_t>(m.y);
  const LinearCombination x = xs < x_powers_.size() ? x_powers_[xs]
                                                     : alg.power(setup_->generators.x_image, m.x);
  const LinearCombination y = ys < y_powers_.size() ? y_powers_[ys]
                                                     : alg.power(setup_->generators.y_image, m.y);
  return alg.multiply(x, y);
}

LinearCombination MirrorMap::image(const TwoVarPoly& f) const {
  LinearCombination out;
  for (const auto& [m, c] : f.terms()) out.add_scaled(image(m), c);
  return out;
}

RelationReport verify_relations(const MirrorSetup& setup) {
  const MirrorMap F(setup);
  const std::int64_t p = setup.chain.p, q = setup.chain.q;
  RelationReport r;
  r.first = F.image(Monomial{static_cast<int>(p - 1), 1});
  r.second = F.image(Monomial{static_cast<int>(p), 0}) + F.image(Monomial{0, static_cast<int>(q - 1)}) * Rational(q);
  return r;
}

MirrorReport verify_isomorphism(const MirrorSetup& setup) {
  const MirrorMap F(setup);
  const MilnorRing& ring = setup.dual_ring;
  const FrobeniusAlgebra& alg = setup.algebra;
  MirrorReport rep;
  rep.state_dim = alg.dimension();
  rep.milnor_dim = ring.mu();

  SparseMatrix images(ring.mu(), alg.dimension());
  for (std::size_t u = 0; u < ring.mu(); ++u) {
    for (const auto& [i, c] : F.basis_images()[u].terms()) images.set(u, i, c);
  }
  rep.image_rank = images.rank();

  for (std::size_t u = 0; u < ring.mu(); ++u) {
    for (std::size_t v = 0; v < ring.mu(); ++v) {
      ++rep.products_checked;
      LinearCombination lhs;
      const LinearCombination uv = ring.coordinates(TwoVarPoly::monomial(ring.basis()[u] * ring.basis()[v]));
      for (const auto& [w, c] : uv.terms()) {
        lhs.add_scaled(F.basis_images()[w], c);
      }
      const LinearCombination rhs = alg.multiply(F.basis_images()[u], F.basis_images()[v]);
      if (lhs != rhs) {
        if (rep.product_mismatches == 0) {
          rep.first_mismatch = "F(NF(" + monomial_label(ring.basis()[u]) + " * " + monomial_label(ring.basis()[v]) +
                               ")) = " + describe(lhs, alg.space()) + " but F(u)*F(v) = " + describe(rhs, alg.space());
        }
        ++rep.product_mismatches;
      }
    }
  }
  rep.relations = verify_relations(setup);
  return rep;
}

PairingComparison compare_pairings(const MirrorSetup& setup) {
  const MirrorMap F(setup);
  const MilnorRing& ring = setup.dual_ring;
  const std::size_t n = ring.mu();
  PairingComparison cmp;
  cmp.residue_gram = ring.gram_matrix();
  cmp.pulled_gram = SparseMatrix(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      cmp.pulled_gram.set(u, v, setup.algebra.pair(F.basis_images()[u], F.basis_images()[v]));
    }
  }

  cmp.same_support = true;
  bool constant = true;
  std::optional<Rational> ratio;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Rational res = cmp.residue_gram.at(u, v), pulled = cmp.pulled_gram.at(u, v);
      if (res.is_zero() != pulled.is_zero()) {
        cmp.same_support = false;
        continue;
      }
      if (res.is_zero()) continue;
      const Rational r = res / pulled;
      if (!ratio) ratio = r;
      constant = constant && *ratio == r;
    }
  }
  if (!cmp.same_support || !constant || !ratio) return cmp;
  cmp.ratio = ratio;

  // a = +-c^{q'}, b = +-c^{p'} with p = g p', q - 1 = g q' keeps a^p = b^{q-1};
  // the socle monomial x^s0 y^t0 then scales by +-c^{q' s0 + p' t0}.
  const std::int64_t p = setup.chain.p, q = setup.chain.q;
  const std::int64_t g = gcd(p, q - 1);
  const std::int64_t pp = p / g, qq = (q - 1) / g;
  const Monomial top = ring.top_monomial();
  const std::int64_t e = qq * top.x + pp * top.y;
  const Rational magnitude = ratio->sign() < 0 ? -*ratio : *ratio;
  const auto c = exact_root(magnitude, static_cast<unsigned>(e));
  if (!c) return cmp;
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      const bool relation_ok = ((p % 2 == 0) ? 1 : sa) == (((q - 1) % 2 == 0) ? 1 : sb);
      const int socle_sign = ((top.x % 2 == 0) ? 1 : sa) * ((top.y % 2 == 0) ? 1 : sb);
      if (relation_ok && socle_sign == ratio->sign()) {
        cmp.rescaling = std::pair{pow(*c, static_cast<unsigned>(qq)) * Rational(sa),
                                  pow(*c, static_cast<unsigned>(pp)) * Rational(sb)};
        return cmp;
      }
    }
  }
  return cmp;
}

CheckResult check_bijection(const MirrorSetup& setup) {
  CheckResult r{"index bijection"};
  const MirrorMap F(setup);
  try {
    const IndexBijection f(setup.chain, setup.generators);
    for (const auto& [st, k] : f.forward()) {
      ++r.cases;
      const LinearCombination expected = LinearCombination::basis(setup.algebra.space().index_of(k));
      // p == 2 rescales X, but the domain then has s == 0 only
      if (F.image(Monomial{st.first, st.second}) != expected) {
        r.fail("e" + std::to_string(k) + " != F(x^" + std::to_string(st.first) + " y^" +
               std::to_string(st.second) + ")");
      }
    }
  } catch (const ConsistencyError& e) {
    r.fail(e.what());
  }
  return r;
}

CheckResult check_dual_monomial_span(const MirrorSetup& setup) {
  CheckResult r{"dual monomial span"};
  const MilnorRing& ring = setup.dual_ring;
  const std::int64_t p = setup.chain.p, q = setup.chain.q;
  std::vector<Monomial> spanning;
  for (int s = 0; s <= p - 2; ++s) {
    for (int t = 0; t <= q - 1; ++t) spanning.push_back({s, t});
  }
  spanning.push_back({static_cast<int>(p - 1), 0});
  SparseMatrix coords(spanning.size(), ring.mu());
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    const LinearCombination v = ring.coordinates(TwoVarPoly::monomial(spanning[i]));
    for (const auto& [j, c] : v.terms()) coords.set(i, j, c);
  }
  r.cases = spanning.size();
  const std::size_t rank = coords.rank();
  if (rank != ring.mu() || spanning.size() != ring.mu()) {
    r.fail("rank " + std::to_string(rank) + " of " + std::to_string(spanning.size()) + " monomials, mu = " +
           std::to_string(ring.mu()));
  }
  return r;
}

CheckResult check_broad_residue(const MirrorSetup& setup) {
  CheckResult r{"broad pairing vs residue"};
  ++r.cases;
  const MilnorRing w_ring(setup.chain.polynomial);
  const Rational res = w_ring.residue(TwoVarPoly::monomial({0, static_cast<int>(2 * setup.chain.q - 2)}));
  const Rational eta00 = setup.algebra.eta().at(0, 0);
  if (res != eta00) r.fail("Res(y^{2q-2}) = " + res.str() + " but eta(broad, broad) = " + eta00.str());
  return r;
}

CheckResult check_relations(const MirrorSetup& setup) {
  CheckResult r{"mirror relations"};
  r.cases = 2;
  const RelationReport rel = verify_relations(setup);
  if (!rel.first.is_zero()) r.fail("F(X)^{p-1} F(Y) = " + describe(rel.first, setup.algebra.space()));
  if (!rel.second.is_zero()) r.fail("F(X)^p + q F(Y)^{q-1} = " + describe(rel.second, setup.algebra.space()));
  return r;
}

CheckResult check_isomorphism(const MirrorSetup& setup) {
  CheckResult r{"mirror isomorphism"};
  const MirrorReport rep = verify_isomorphism(setup);
  r.cases = rep.products_checked + 2;
  if (rep.state_dim != rep.milnor_dim) {
    r.fail("dim H = " + std::to_string(rep.state_dim) + ", mu = " + std::to_string(rep.milnor_dim));
  }
  if (rep.image_rank != rep.state_dim) r.fail("images have rank " + std::to_string(rep.image_rank));
  if (rep.product_mismatches != 0) r.fail(rep.first_mismatch);
  if (!rep.relations.holds()) r.fail("relations fail");
  return r;
}

std::vector<CheckResult> verify_all(std::int64_t p, std::int64_t q) { return verify_all(make_mirror_setup(p, q)); }

std::vector<CheckResult> verify_all(const MirrorSetup& setup) {
  std::vector<CheckResult> out = amodel_checks(setup.algebra);
  for (CheckResult c : bmodel_checks(setup.dual_ring)) {
    c.name = "dual " + c.name;
    out.push_back(std::move(c));
  }
  for (CheckResult c : bmodel_checks(MilnorRing(setup.chain.polynomial))) {
    c.name = "chain " + c.name;
    out.push_back(std::move(c));
  }
  out.push_back(check_dual_monomial_span(setup));
  out.push_back(check_broad_residue(setup));
  out.push_back(check_bijection(setup));
  out.push_back(check_relations(setup));
  out.push_back(check_isomorphism(setup));
  return out;
}

}  // namespace lgm
