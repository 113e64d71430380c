#include "lgm/bmodel.hpp"

#include <algorithm>
#include <numeric>

namespace lgm {

MonomialOrder::MonomialOrder(const Weights& w) {
  // Scale both weights by the lcm of their denominators.
  const BigInt lcm = w.x.denominator() * w.y.denominator() /
                     BigInt(gcd(w.x.denominator().get_si(), w.y.denominator().get_si()));
  const Rational sx = w.x * Rational(lcm);
  const Rational sy = w.y * Rational(lcm);
  wx_ = sx.numerator().get_si();
  wy_ = sy.numerator().get_si();
}

bool MonomialOrder::less(Monomial a, Monomial b) const {
  const long da = scaled_degree(a), db = scaled_degree(b);
  if (da != db) return da < db;
  return a.x < b.x;
}

Monomial MonomialOrder::leading(const TwoVarPoly& f) const {
  Monomial best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) {
    if (less(best, m)) best = m;
  }
  return best;
}

namespace {

struct Divisor {
  Monomial lead;
  Rational lead_coeff;
  const TwoVarPoly* poly;
};

TwoVarPoly make_monic(const TwoVarPoly& f, const MonomialOrder& ord) {
  return f * (Rational(1) / f.coeff(ord.leading(f)));
}

// Full reduction of f modulo the divisors.
TwoVarPoly reduce(TwoVarPoly f, const std::vector<TwoVarPoly>& divisors, const MonomialOrder& ord) {
  std::vector<Divisor> ds;
  for (const auto& g : divisors) {
    const Monomial lm = ord.leading(g);
    ds.push_back({lm, g.coeff(lm), &g});
  }
  TwoVarPoly remainder;
  while (!f.is_zero()) {
    const Monomial lm = ord.leading(f);
    const Rational lc = f.coeff(lm);
    auto it = std::find_if(ds.begin(), ds.end(), [&](const Divisor& d) { return d.lead.divides(lm); });
    if (it == ds.end()) {
      remainder.add_term(lm, lc);
      f.add_term(lm, -lc);
    } else {
      const Monomial shift{lm.x - it->lead.x, lm.y - it->lead.y};
      f -= TwoVarPoly::monomial(shift, lc / it->lead_coeff) * *it->poly;
    }
  }
  return remainder;
}

TwoVarPoly s_polynomial(const TwoVarPoly& f, const TwoVarPoly& g, const MonomialOrder& ord) {
  const Monomial lf = ord.leading(f), lg = ord.leading(g);
  const Monomial lcm{std::max(lf.x, lg.x), std::max(lf.y, lg.y)};
  return TwoVarPoly::monomial({lcm.x - lf.x, lcm.y - lf.y}, Rational(1) / f.coeff(lf)) * f -
         TwoVarPoly::monomial({lcm.x - lg.x, lcm.y - lg.y}, Rational(1) / g.coeff(lg)) * g;
}

Weights require_weights(const TwoVarPoly& f) {
  auto w = solve_weights(f);
  if (!w) throw DomainError("polynomial " + f.str() + " has no unique positive quasi-homogeneous weights");
  return *w;
}

std::vector<TwoVarPoly> groebner(const TwoVarPoly& f, const MonomialOrder& ord) {
  std::vector<TwoVarPoly> g;
  for (const auto& gen : {f.d_dx(), f.d_dy()}) {
    if (!gen.is_zero()) g.push_back(make_monic(gen, ord));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    TwoVarPoly r = reduce(s_polynomial(g[i], g[j], ord), g, ord);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, ord));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<TwoVarPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial li = ord.leading(g[i]);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial lj = ord.leading(g[j]);
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce tails.
  std::vector<TwoVarPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TwoVarPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Monomial lm = ord.leading(minimal[i]);
    TwoVarPoly tail = minimal[i];
    tail.add_term(lm, -tail.coeff(lm));
    reduced.push_back(TwoVarPoly::monomial(lm) + reduce(tail, others, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TwoVarPoly& a, const TwoVarPoly& b) {
    return ord.less(ord.leading(a), ord.leading(b));
  });
  return reduced;
}

}  // namespace

std::vector<TwoVarPoly> reduce_ideal(const TwoVarPoly& f) {
  const MonomialOrder ord(require_weights(f));
  auto g = groebner(f, ord);
  bool pure_x = false, pure_y = false;
  for (const auto& h : g) {
    const Monomial lm = ord.leading(h);
    pure_x = pure_x || lm.y == 0;
    pure_y = pure_y || lm.x == 0;
  }
  if (!pure_x || !pure_y) {
    throw NonIsolatedSingularity("Jacobian ideal of " + f.str() +
                                 " has infinite colength (singularity not isolated)");
  }
  return g;
}

MilnorRing::MilnorRing(TwoVarPoly f)
    : f_(std::move(f)), weights_(require_weights(f_)), order_(weights_), ideal_(reduce_ideal(f_)) {
  int max_x = 0, max_y = 0;
  std::vector<Monomial> leads;
  for (const auto& g : ideal_) {
    const Monomial lm = order_.leading(g);
    leads.push_back(lm);
    if (lm.y == 0) max_x = lm.x;
    if (lm.x == 0) max_y = lm.y;
  }
  for (int s = 0; s < max_x; ++s) {
    for (int t = 0; t < max_y; ++t) {
      const Monomial m{s, t};
      if (std::none_of(leads.begin(), leads.end(), [&](Monomial l) { return l.divides(m); })) {
        basis_.push_back(m);
      }
    }
  }
  std::sort(basis_.begin(), basis_.end(), [&](Monomial a, Monomial b) { return order_.less(a, b); });

  top_ = basis_.back();
  const long top_degree = order_.scaled_degree(top_);
  if (basis_.size() > 1 && order_.scaled_degree(basis_[basis_.size() - 2]) == top_degree) {
    throw ConsistencyError("top graded piece of the Milnor ring is not one-dimensional");
  }
  if (weighted_degree(top_, weights_) != c_hat()) {
    throw ConsistencyError("socle degree differs from the central charge");
  }
  const TwoVarPoly hess = normal_form(hessian_det(f_));
  hess_coeff_ = hess.coeff(top_);
  if (hess_coeff_.is_zero() || hess.terms().size() != 1) {
    throw ConsistencyError("Hessian does not normalize to a multiple of the socle monomial");
  }
}

std::optional<std::size_t> MilnorRing::basis_index(Monomial m) const {
  auto it = std::find(basis_.begin(), basis_.end(), m);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

TwoVarPoly MilnorRing::normal_form(const TwoVarPoly& g) const { return reduce(g, ideal_, order_); }

LinearCombination MilnorRing::coordinates(const TwoVarPoly& g) const {
  LinearCombination out;
  const TwoVarPoly nf = normal_form(g);
  for (const auto& [m, c] : nf.terms()) out.add(*basis_index(m), c);
  return out;
}

Rational MilnorRing::residue(const TwoVarPoly& g) const {
  return normal_form(g).coeff(top_) * Rational(static_cast<std::int64_t>(mu())) / hess_coeff_;
}

SparseMatrix MilnorRing::gram_matrix() const {
  const std::size_t n = mu();
  SparseMatrix gram(n, n);
  const long top_degree = order_.scaled_degree(top_);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      // normal_form preserves weighted degree, so only complementary degrees reach the socle
      if (order_.scaled_degree(basis_[u]) + order_.scaled_degree(basis_[v]) != top_degree) continue;
      const Rational r = residue(TwoVarPoly::monomial(basis_[u] * basis_[v]));
      gram.set(u, v, r);
      gram.set(v, u, r);
    }
  }
  return gram;
}

CheckResult check_milnor_dimension(const MilnorRing& ring) {
  CheckResult r{"Milnor number"};
  ++r.cases;
  const Rational expected = milnor_number(ring.weights());
  if (Rational(static_cast<std::int64_t>(ring.mu())) != expected) {
    r.fail("|basis| = " + std::to_string(ring.mu()) + " but weight formula gives " + expected.pretty());
  }
  return r;
}

CheckResult check_normal_form(const MilnorRing& ring) {
  CheckResult r{"normal form idempotence"};
  for (Monomial m : ring.basis()) {
    ++r.cases;
    if (ring.normal_form(TwoVarPoly::monomial(m)) != TwoVarPoly::monomial(m)) {
      r.fail("basis monomial " + monomial_label(m) + " not fixed");
    }
  }
  for (Monomial a : ring.basis()) {
    for (Monomial b : ring.basis()) {
      ++r.cases;
      const TwoVarPoly nf = ring.normal_form(TwoVarPoly::monomial(a * b));
      if (ring.normal_form(nf) != nf) r.fail("normal form of " + monomial_label(a * b) + " not idempotent");
      for (const auto& [m, c] : nf.terms()) {
        if (!ring.basis_index(m)) r.fail("normal form leaves the standard monomials");
      }
    }
  }
  return r;
}

CheckResult check_residue(const MilnorRing& ring) {
  CheckResult r{"residue normalization"};
  ++r.cases;
  const Rational res_hess = ring.residue(hessian_det(ring.polynomial()));
  if (res_hess != Rational(static_cast<std::int64_t>(ring.mu()))) {
    r.fail("Res(hess) = " + res_hess.str() + ", expected mu");
  }
  const auto [fx, fy] = jacobian(ring.polynomial());
  for (Monomial m : ring.basis()) {
    r.cases += 2;
    if (!ring.residue(TwoVarPoly::monomial(m) * fx).is_zero() ||
        !ring.residue(TwoVarPoly::monomial(m) * fy).is_zero()) {
      r.fail("residue does not vanish on " + monomial_label(m) + " * Jacobian");
    }
  }
  return r;
}

CheckResult check_gram(const MilnorRing& ring) {
  CheckResult r{"residue pairing"};
  const SparseMatrix gram = ring.gram_matrix();
  r.cases = gram.nonzeros();
  if (!gram.is_symmetric()) r.fail("Gram matrix not symmetric");
  const long top = ring.order().scaled_degree(ring.top_monomial());
  for (std::size_t u = 0; u < ring.mu(); ++u) {
    for (const auto& [v, val] : gram.row(u).terms()) {
      if (ring.order().scaled_degree(ring.basis()[u]) + ring.order().scaled_degree(ring.basis()[v]) != top) {
        r.fail("nonzero Gram entry off complementary degrees");
      }
    }
  }
  if (gram.determinant().is_zero()) r.fail("residue pairing degenerate");
  return r;
}

std::vector<CheckResult> bmodel_checks(const MilnorRing& ring) {
  return {check_milnor_dimension(ring), check_normal_form(ring), check_residue(ring), check_gram(ring)};
}

}  // namespace lgm
