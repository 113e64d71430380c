#include <doctest.h>

#include "lgm/mirror.hpp"
#include "oracles.hpp"

using lgm::LinearCombination;
using lgm::Rational;

TEST_CASE("generator indices") {
  const auto e7 = lgm::make_mirror_setup(3, 3);
  CHECK(e7.generators.k_index == 5);
  CHECK(e7.generators.m_index == 7);
  const auto d4 = lgm::make_mirror_setup(3, 2);
  CHECK(d4.generators.k_index == 1);
  CHECK(d4.generators.m_index == 5);
  for (int q = 2; q <= 8; ++q) {
    const auto a = lgm::make_mirror_setup(2, q);
    CHECK(a.generators.k_index == 0);
    CHECK(a.generators.m_index == 3);
    CHECK(a.generators.x_image == LinearCombination::basis(0, Rational(-q)));
  }
}

TEST_CASE("generator degrees are the dual weights") {
  for (int p = 2; p <= 10; ++p) {
    for (int q = 2; q <= 10; ++q) {
      const auto s = lgm::make_mirror_setup(p, q);
      const auto& sp = s.algebra.space();
      CHECK(sp[sp.index_of(s.generators.k_index)].degree == s.dual.weights.x);
      CHECK(sp[sp.index_of(s.generators.m_index)].degree == s.dual.weights.y);
    }
  }
}

TEST_CASE("generators solve their congruences") {
  for (int p = 2; p <= 10; ++p) {
    for (int q = 2; q <= 10; ++q) {
      const auto s = lgm::make_mirror_setup(p, q);
      if (!s.chain.coprime()) continue;
      const std::int64_t n = p * q;
      const auto M = oracle::congruence(p - 1, 1, n);
      REQUIRE(M);
      CHECK(oracle::pmod((s.generators.k_index - 1) * (p - 1) + 1, n) == 0);
      CHECK(s.generators.m_index == oracle::pmod(*M + 2, n));
    }
  }
}

TEST_CASE("index bijection") {
  const auto s = lgm::make_mirror_setup(3, 3);
  const lgm::IndexBijection f(s.chain, s.generators);
  CHECK(f(1, 0) == 5);
  CHECK(f(0, 1) == 7);
  CHECK(f(1, 1) == 2);
  CHECK(f(0, 0) == 1);
  CHECK(f.preimage(2) == std::pair{1, 1});
  CHECK(f.size() == 6);

  const auto t = lgm::make_mirror_setup(3, 2);
  const lgm::IndexBijection g(t.chain, t.generators);
  CHECK(g(0, 0) == 2);
  CHECK(g(1, 0) == 1);
  CHECK(g(0, 1) == 5);
}

TEST_CASE("mirror checks across the scan range") {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto s = lgm::make_mirror_setup(p, q);
      for (const auto& c : {lgm::check_bijection(s), lgm::check_dual_monomial_span(s), lgm::check_broad_residue(s),
                            lgm::check_relations(s), lgm::check_isomorphism(s)}) {
        INFO(c.name << ": " << c.counterexample);
        CHECK(c.passed);
      }
      const auto rep = lgm::verify_isomorphism(s);
      CHECK(rep.isomorphism());
      CHECK(rep.products_checked == rep.milnor_dim * rep.milnor_dim);
    }
  }
}

TEST_CASE("mirror map on monomials") {
  const auto s = lgm::make_mirror_setup(4, 3);
  const lgm::MirrorMap F(s);
  const auto& sp = s.algebra.space();
  // x^4 = -3 y^2 on the dual side; both sides give -3 e11 under F
  CHECK(F.image(lgm::Monomial{4, 0}) == LinearCombination::basis(sp.index_of(11), Rational(-3)));
  CHECK(F.image(lgm::TwoVarPoly::monomial({0, 2}, Rational(-3))) ==
        LinearCombination::basis(sp.index_of(11), Rational(-3)));
  CHECK(F.image(lgm::Monomial{0, 0}) == s.algebra.unit());
}

TEST_CASE("the unscaled broad generator fails the relations for p = 2") {
  for (int q = 2; q <= 6; ++q) {
    auto s = lgm::make_mirror_setup(2, q);
    s.generators.x_image = LinearCombination::basis(0);
    CHECK_FALSE(lgm::check_relations(s).passed);
  }
}

TEST_CASE("a wrong generator is rejected") {
  auto s = lgm::make_mirror_setup(3, 3);
  s.generators.y_image = LinearCombination::basis(s.algebra.space().index_of(2));
  CHECK_FALSE(lgm::check_isomorphism(s).passed);
}

TEST_CASE("pairing comparison diagnostics") {
  for (int p = 2; p <= 7; ++p) {
    for (int q = 2; q <= 7; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto s = lgm::make_mirror_setup(p, q);
      const auto cmp = lgm::compare_pairings(s);
      CHECK(cmp.same_support);
      CHECK_FALSE(cmp.residue_gram.determinant().is_zero());
      CHECK_FALSE(cmp.pulled_gram.determinant().is_zero());
      REQUIRE(cmp.ratio);
      if (cmp.rescaling) {
        const auto [a, b] = *cmp.rescaling;
        CHECK(lgm::pow(a, p) == lgm::pow(b, q - 1));
        const auto top = s.dual_ring.top_monomial();
        CHECK(lgm::pow(a, top.x) * lgm::pow(b, top.y) == *cmp.ratio);
      }
    }
  }
  const auto e7 = lgm::compare_pairings(lgm::make_mirror_setup(3, 3));
  CHECK(e7.ratio == Rational(1, 9));
  CHECK_FALSE(e7.rescaling);
}

TEST_CASE("verify_all collects every suite") {
  const auto checks = lgm::verify_all(4, 3);
  CHECK(checks.size() == 21);
  CHECK(lgm::all_passed(checks));
}
