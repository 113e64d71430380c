// The chain singularity W = x^p + x y^q and its Berglund-Hubsch transpose
// x^p y + y^q.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "lgm/arith.hpp"
#include "lgm/polynomial.hpp"

namespace lgm {

/// Rejected user input (bad exponents, malformed arguments).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity violated a postcondition that holds mathematically;
/// signals a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ChainSingularity {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t d = 0;  // gcd(p - 1, q); d == 1 and d > 1 use different group generators
  TwoVarPoly polynomial;
  Weights weights;
  Rational c_hat;
  std::int64_t mu = 0;

  std::int64_t order() const { return p * q; }  // |G_max|
  bool coprime() const { return d == 1; }
};

/// Throws DomainError unless p >= 2 and q >= 2.
ChainSingularity make_chain(std::int64_t p, std::int64_t q);

struct DualSingularity {
  std::int64_t p = 0;
  std::int64_t q = 0;
  TwoVarPoly polynomial;
  Weights weights;
  Rational c_hat;
  std::int64_t mu = 0;
};

DualSingularity make_dual(std::int64_t p, std::int64_t q);

std::pair<TwoVarPoly, TwoVarPoly> jacobian(const TwoVarPoly& w);

/// W_xx * W_yy - W_xy^2.
TwoVarPoly hessian_det(const TwoVarPoly& w);

/// "E7", "D4", "A5" for chains that are simple singularities, "" otherwise.
std::string ade_name(std::int64_t p, std::int64_t q);

}  // namespace lgm
