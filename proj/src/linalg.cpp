#include "lgm/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lgm {

LinearCombination LinearCombination::basis(std::size_t index, Rational coeff) {
  LinearCombination lc;
  lc.add(index, coeff);
  return lc;
}

Rational LinearCombination::coeff(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Rational(0);
}

void LinearCombination::add(std::size_t index, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{index, c});
  }
}

void LinearCombination::add_scaled(const LinearCombination& other, const Rational& c) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Rational v = a->second + b->second * c;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LinearCombination& LinearCombination::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseMatrix::set");
  LinearCombination& row = rows_[r];
  row.add(c, v - row.coeff(c));
}

bool SparseMatrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : rows_[r].terms()) {
      if (at(c, r) != v) return false;
    }
  }
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

// Connected components of the bipartite graph rows <-> cols (edge per nonzero).
std::vector<SparseMatrix::Block> SparseMatrix::blocks() const {
  const std::size_t nr = rows(), nc = cols();
  std::vector<std::size_t> parent(nr + nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < nr; ++r) {
    for (const auto& t : rows_[r].terms()) parent[find(r)] = find(nr + t.first);
  }
  std::vector<std::size_t> slot(nr + nc, SIZE_MAX);
  std::vector<Block> out;
  for (std::size_t v = 0; v < nr + nc; ++v) {
    const std::size_t root = find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    Block& b = out[slot[root]];
    if (v < nr) b.rows.push_back(v); else b.cols.push_back(v - nr);
  }
  return out;
}

namespace {

// Sign of the permutation listing 0..n-1 in the given order.
int permutation_sign(const std::vector<std::size_t>& order) {
  std::vector<bool> seen(order.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Rational SparseMatrix::determinant() const {
  if (rows() != cols()) throw std::invalid_argument("determinant: matrix not square");
  if (rows() == 0) return Rational(1);
  const auto bs = blocks();
  std::vector<std::size_t> row_order, col_order;
  Rational det(1);
  for (const auto& b : bs) {
    if (b.rows.size() != b.cols.size()) return Rational(0);
    DenseMatrix dense(b.rows.size(), std::vector<Rational>(b.cols.size()));
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      for (std::size_t j = 0; j < b.cols.size(); ++j) dense[i][j] = at(b.rows[i], b.cols[j]);
    }
    det *= dense_determinant(std::move(dense));
    if (det.is_zero()) return det;
    row_order.insert(row_order.end(), b.rows.begin(), b.rows.end());
    col_order.insert(col_order.end(), b.cols.begin(), b.cols.end());
  }
  const int sign = permutation_sign(row_order) * permutation_sign(col_order);
  return sign < 0 ? -det : det;
}

std::optional<SparseMatrix> SparseMatrix::inverse() const {
  if (rows() != cols()) throw std::invalid_argument("inverse: matrix not square");
  SparseMatrix inv(cols(), rows());
  for (const auto& b : blocks()) {
    if (b.rows.size() != b.cols.size()) return std::nullopt;
    DenseMatrix dense(b.rows.size(), std::vector<Rational>(b.cols.size()));
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      for (std::size_t j = 0; j < b.cols.size(); ++j) dense[i][j] = at(b.rows[i], b.cols[j]);
    }
    auto block_inv = dense_inverse(std::move(dense));
    if (!block_inv) return std::nullopt;
    // (A[R,C])^{-1} maps back to inverse rows C, columns R.
    for (std::size_t i = 0; i < b.cols.size(); ++i) {
      for (std::size_t j = 0; j < b.rows.size(); ++j) {
        if (!(*block_inv)[i][j].is_zero()) inv.set(b.cols[i], b.rows[j], (*block_inv)[i][j]);
      }
    }
  }
  return inv;
}

std::size_t SparseMatrix::rank() const {
  std::size_t total = 0;
  for (const auto& b : blocks()) {
    if (b.rows.empty() || b.cols.empty()) continue;
    DenseMatrix dense(b.rows.size(), std::vector<Rational>(b.cols.size()));
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      for (std::size_t j = 0; j < b.cols.size(); ++j) dense[i][j] = at(b.rows[i], b.cols[j]);
    }
    total += dense_rank(std::move(dense));
  }
  return total;
}

LinearCombination SparseMatrix::left_multiply(const LinearCombination& x) const {
  LinearCombination out;
  for (const auto& [r, c] : x.terms()) out.add_scaled(rows_.at(r), c);
  return out;
}

Rational SparseMatrix::bilinear(const LinearCombination& x, const LinearCombination& y) const {
  const LinearCombination xa = left_multiply(x);
  Rational acc(0);
  for (const auto& [i, v] : xa.terms()) acc += v * y.coeff(i);
  return acc;
}

// Gaussian elimination; returns (rank, determinant sign/product) in one pass.
namespace {

struct Elimination {
  std::size_t rank = 0;
  Rational det = Rational(1);
};

Elimination eliminate(DenseMatrix& m) {
  Elimination e;
  const std::size_t nr = m.size();
  const std::size_t nc = nr == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t pivot = row;
    while (pivot < nr && m[pivot][col].is_zero()) ++pivot;
    if (pivot == nr) {
      e.det = Rational(0);
      continue;
    }
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      e.det = -e.det;
    }
    e.det *= m[row][col];
    for (std::size_t r = row + 1; r < nr; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < nc; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  e.rank = row;
  if (row < nr) e.det = Rational(0);
  return e;
}

}  // namespace

Rational dense_determinant(DenseMatrix m) {
  for (const auto& r : m) {
    if (r.size() != m.size()) throw std::invalid_argument("dense_determinant: not square");
  }
  if (m.empty()) return Rational(1);
  return eliminate(m).det;
}

std::size_t dense_rank(DenseMatrix m) { return eliminate(m).rank; }

std::optional<DenseMatrix> dense_inverse(DenseMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("dense_inverse: not square");
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    const Rational inv_p = Rational(1) / m[col][col];
    for (auto& v : m[col]) v *= inv_p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
  return out;
}

}  // namespace lgm
