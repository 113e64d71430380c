#include <doctest.h>

#include <random>
#include <sstream>

#include "lgm/arith.hpp"
#include "lgm/linalg.hpp"
#include "lgm/polynomial.hpp"
#include "oracles.hpp"

using lgm::Rational;

TEST_CASE("rational canonical form and rendering") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational(4).pretty() == "4");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(" -2/6") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  std::ostringstream os;
  os << Rational(-8, 9);
  CHECK(os.str() == "-8/9");
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(lgm::frac_part(Rational(-7, 2)) == Rational(1, 2));
  CHECK(lgm::frac_part(Rational(9, 3)).is_zero());
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(lgm::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(lgm::pow(Rational(5), 0) == Rational(1));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
}

TEST_CASE("frac_part stays in [0, 1) and differs by an integer") {
  for (int n = -40; n <= 40; ++n) {
    for (int d = 1; d <= 12; ++d) {
      const Rational r(n, d);
      const Rational f = lgm::frac_part(r);
      CHECK(f >= Rational(0));
      CHECK(f < Rational(1));
      CHECK((r - f).is_integer());
    }
  }
}

TEST_CASE("solve_congruence agrees with a scan") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t a = -5; a <= 30; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        CHECK(lgm::solve_congruence(a, b, n) == oracle::congruence(a, b, n));
      }
    }
  }
  CHECK_THROWS_AS(lgm::solve_congruence(1, 1, 0), std::invalid_argument);
  CHECK(lgm::mod(-7, 5) == 3);
  CHECK(lgm::gcd(-12, 18) == 6);
}

TEST_CASE("exact_root") {
  CHECK(lgm::exact_root(Rational(8, 27), 3) == Rational(2, 3));
  CHECK(lgm::exact_root(Rational(1, 9), 8) == std::nullopt);
  CHECK(lgm::exact_root(Rational(1), 5) == Rational(1));
  CHECK(lgm::exact_root(Rational(2), 2) == std::nullopt);
}

TEST_CASE("linear combinations drop zeros") {
  lgm::LinearCombination v = lgm::LinearCombination::basis(3, Rational(2));
  v.add(1, Rational(1));
  v.add(3, Rational(-2));
  CHECK(v.size() == 1);
  CHECK(v.coeff(1) == Rational(1));
  CHECK(v.coeff(3).is_zero());
  v -= v;
  CHECK(v.is_zero());
}

namespace {

lgm::DenseMatrix to_dense(const lgm::SparseMatrix& m) {
  lgm::DenseMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  }
  return out;
}

}  // namespace

TEST_CASE("sparse determinant, inverse and rank match dense elimination") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> val(-3, 3), coin(0, 3), size(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    lgm::SparseMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (coin(rng) == 0) m.set(r, c, Rational(val(rng)));
      }
    }
    const Rational det = m.determinant();
    CHECK(det == lgm::dense_determinant(to_dense(m)));
    CHECK(m.rank() == lgm::dense_rank(to_dense(m)));
    const auto inv = m.inverse();
    CHECK(inv.has_value() == !det.is_zero());
    if (inv) {
      for (std::size_t r = 0; r < n; ++r) {
        const auto row = inv->left_multiply(lgm::LinearCombination::basis(r));
        CHECK(m.left_multiply(row) == lgm::LinearCombination::basis(r));
      }
    }
  }
}

TEST_CASE("permutation matrices have determinant equal to their sign") {
  std::vector<std::size_t> perm{0, 1, 2, 3, 4};
  do {
    lgm::SparseMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) m.set(i, perm[i], Rational(1));
    int inversions = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) inversions += perm[i] > perm[j];
    }
    CHECK(m.determinant() == Rational(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("polynomial arithmetic and rendering") {
  using lgm::Monomial;
  using lgm::TwoVarPoly;
  const TwoVarPoly x = TwoVarPoly::monomial({1, 0});
  const TwoVarPoly y = TwoVarPoly::monomial({0, 1});
  const TwoVarPoly w = x * x * x + x * y * y * y;
  CHECK(w.str() == "x^3 + x*y^3");
  CHECK(w.d_dx().str() == "3*x^2 + y^3");
  CHECK(w.d_dy().str() == "3*x*y^2");
  CHECK((w - w).is_zero());
  CHECK((w - w).str() == "0");
  CHECK((x * Rational(1, 2) - y).str() == "1/2*x - y");
  CHECK(lgm::monomial_label({2, 1}) == "x^2 y");
  CHECK(lgm::monomial_label({0, 0}) == "1");
  CHECK(lgm::monomial_label({1, 1}) == "x y");
}

TEST_CASE("quasi-homogeneous weights") {
  using lgm::TwoVarPoly;
  const TwoVarPoly x = TwoVarPoly::monomial({1, 0});
  const TwoVarPoly y = TwoVarPoly::monomial({0, 1});
  const auto w = lgm::solve_weights(x * x * x + x * y * y * y);
  REQUIRE(w);
  CHECK(w->x == Rational(1, 3));
  CHECK(w->y == Rational(2, 9));
  CHECK(lgm::central_charge(*w) == Rational(8, 9));
  CHECK(lgm::milnor_number(*w) == Rational(7));
  CHECK_FALSE(lgm::solve_weights(x * x + y * y * y + x * y));
  CHECK_FALSE(lgm::solve_weights(x * x));
  // x^2 y^2 and x y have parallel exponents and no common weights
  CHECK_FALSE(lgm::solve_weights(x * x * y * y + x * y));
}
