#include <doctest.h>

#include "lgm/singularity.hpp"
#include "oracles.hpp"

using lgm::Rational;

TEST_CASE("chain invariants match closed forms") {
  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      const auto s = lgm::make_chain(p, q);
      const auto o = oracle::chain(p, q);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(s.d == o.d);
      CHECK(s.weights.x == oracle::to_lgm(o.wx));
      CHECK(s.weights.y == oracle::to_lgm(o.wy));
      CHECK(s.c_hat == oracle::to_lgm(o.chat));
      CHECK(s.mu == p * q - p + 1);
      CHECK(s.order() == p * q);
      CHECK(s.coprime() == (o.d == 1));
    }
  }
}

TEST_CASE("dual invariants") {
  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      const auto s = lgm::make_chain(p, q);
      const auto t = lgm::make_dual(p, q);
      CHECK(t.weights.x == Rational(q - 1, p * q));
      CHECK(t.weights.y == Rational(1, q));
      CHECK(t.c_hat == s.c_hat);
      CHECK(t.mu == p * q - q + 1);
    }
  }
  CHECK(lgm::make_dual(3, 3).polynomial.str() == "x^3*y + y^3");
}

TEST_CASE("domain guard") {
  CHECK_THROWS_AS(lgm::make_chain(1, 3), lgm::DomainError);
  CHECK_THROWS_AS(lgm::make_chain(3, 1), lgm::DomainError);
  CHECK_THROWS_AS(lgm::make_chain(0, 0), lgm::DomainError);
  CHECK_THROWS_AS(lgm::make_dual(1, 3), lgm::DomainError);
}

TEST_CASE("named singularities") {
  CHECK(lgm::ade_name(3, 3) == "E7");
  CHECK(lgm::ade_name(3, 2) == "D4");
  CHECK(lgm::ade_name(5, 2) == "D6");
  CHECK(lgm::ade_name(2, 4) == "A7");
  CHECK(lgm::ade_name(4, 4).empty());
  const auto e7 = lgm::make_chain(3, 3);
  CHECK(e7.c_hat == Rational(8, 9));
  CHECK(e7.mu == 7);
  CHECK(lgm::make_chain(3, 2).mu == 4);
}

TEST_CASE("Jacobian and Hessian") {
  const auto s = lgm::make_chain(3, 2);
  const auto [fx, fy] = lgm::jacobian(s.polynomial);
  CHECK(fx.str() == "3*x^2 + y^2");
  CHECK(fy.str() == "2*x*y");
  CHECK(lgm::hessian_det(s.polynomial).str() == "12*x^2 - 4*y^2");
}
