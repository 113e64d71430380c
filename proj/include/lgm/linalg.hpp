// Exact sparse linear algebra over the rationals.
//
// State spaces and Milnor rings are graded and their pairings only couple
// complementary degrees, so Gram matrices split into many tiny blocks.
// SparseMatrix exploits that: determinant, inverse and rank are computed
// block by block after finding the connected components of the row/column
// incidence graph.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lgm/arith.hpp"

namespace lgm {

/// Sparse vector: sorted (index, coefficient) pairs, no stored zeros.
class LinearCombination {
 public:
  using Term = std::pair<std::size_t, Rational>;

  LinearCombination() = default;
  static LinearCombination basis(std::size_t index, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(std::size_t index) const;

  /// Adds c * e_index.
  void add(std::size_t index, const Rational& c);
  void add_scaled(const LinearCombination& other, const Rational& c);

  LinearCombination& operator+=(const LinearCombination& o) { add_scaled(o, Rational(1)); return *this; }
  LinearCombination& operator-=(const LinearCombination& o) { add_scaled(o, Rational(-1)); return *this; }
  LinearCombination& operator*=(const Rational& c);

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& c) { return a *= c; }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::vector<Term> terms_;
};

/// Square-or-rectangular sparse matrix stored by rows.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const { return rows_[r].coeff(c); }
  void set(std::size_t r, std::size_t c, const Rational& v);
  const LinearCombination& row(std::size_t r) const { return rows_[r]; }

  bool is_symmetric() const;
  std::size_t nonzeros() const;

  /// Exact determinant; throws std::invalid_argument if not square.
  Rational determinant() const;
  /// Exact inverse, nullopt when singular.
  std::optional<SparseMatrix> inverse() const;
  std::size_t rank() const;

  /// x^T * this (row vector times matrix).
  LinearCombination left_multiply(const LinearCombination& x) const;
  /// x^T * this * y.
  Rational bilinear(const LinearCombination& x, const LinearCombination& y) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
  };
  std::vector<Block> blocks() const;

  std::size_t cols_;
  std::vector<LinearCombination> rows_;
};

/// Dense row-major helpers used for small blocks.
using DenseMatrix = std::vector<std::vector<Rational>>;

Rational dense_determinant(DenseMatrix m);
std::size_t dense_rank(DenseMatrix m);
std::optional<DenseMatrix> dense_inverse(DenseMatrix m);

}  // namespace lgm
