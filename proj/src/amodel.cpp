#include "lgm/amodel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgm {

namespace {

constexpr std::size_t kMaxCachedDimension = 1200;

std::string triple_label(const StateSpace& sp, std::size_t a, std::size_t b, std::size_t c) {
  return "<" + sp[a].label() + "," + sp[b].label() + "," + sp[c].label() + ">";
}

std::string render(const StateSpace& sp, const LinearCombination& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.pretty() << "*" << sp[i].label();
  }
  return os.str();
}

}  // namespace

Sector make_sector(const ChainSingularity& s, std::int64_t k) {
  const std::int64_t n = s.order();
  Sector sec;
  sec.k = mod(k, n);
  if (s.coprime()) {
    // J acts by (xi^p, xi^(p-1)), xi = exp(2 pi i / pq)
    sec.theta_x = frac_part(Rational(sec.k, s.p));
    sec.theta_y = frac_part(Rational(sec.k * (s.p - 1), n));
  } else {
    // lambda acts by (xi^(-q), xi)
    sec.theta_x = frac_part(Rational(s.p - sec.k, s.p));
    sec.theta_y = frac_part(Rational(sec.k, n));
  }
  sec.iota = sec.theta_x - s.weights.x + sec.theta_y - s.weights.y;
  sec.fixed_dim = (sec.theta_x.is_zero() ? 1 : 0) + (sec.theta_y.is_zero() ? 1 : 0);
  sec.narrow = sec.fixed_dim == 0;
  return sec;
}

std::string BasisElement::label() const {
  return broad() ? std::string("broad") : "e" + std::to_string(sector);
}

std::int64_t expected_unit_sector(const ChainSingularity& s) { return s.coprime() ? 1 : s.p - 1; }

StateSpace::StateSpace(ChainSingularity s) : s_(std::move(s)) {
  const std::int64_t n = s_.order();
  position_.assign(static_cast<std::size_t>(n), -1);

  // Broad sector: e_0 = dx ^ dy has form degree 2, so deg_C = 1 + iota_0.
  Sector broad = make_sector(s_, 0);
  if (broad.fixed_dim != 2) throw ConsistencyError("identity sector is not fully broad");
  basis_.push_back({0, Rational(1) + broad.iota});
  sectors_.push_back(broad);
  position_[0] = 0;

  for (std::int64_t k = 1; k < n; ++k) {
    if (k % s_.p == 0) continue;
    Sector sec = make_sector(s_, k);
    if (!sec.narrow) throw ConsistencyError("sector " + std::to_string(k) + " expected narrow");
    position_[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(basis_.size());
    basis_.push_back({k, sec.iota});
    sectors_.push_back(std::move(sec));
  }

  const auto expected = static_cast<std::size_t>(s_.p * s_.q + 1 - s_.q);
  if (basis_.size() != expected) throw ConsistencyError("state space dimension mismatch");
  if (Rational(2) * basis_[0].degree != s_.c_hat) {
    throw ConsistencyError("broad degree is not c_hat/2");
  }

  for (std::size_t i = 0; i < basis_.size(); ++i) by_degree_[basis_[i].degree].push_back(i);

  auto zero = by_degree_.find(Rational(0));
  if (zero == by_degree_.end() || zero->second.size() != 1) {
    throw ConsistencyError("no unique degree-0 element");
  }
  unit_ = zero->second.front();
  if (basis_[unit_].sector != expected_unit_sector(s_)) {
    throw ConsistencyError("degree-0 element is " + basis_[unit_].label() +
                           ", expected e" + std::to_string(expected_unit_sector(s_)));
  }
}

std::optional<std::size_t> StateSpace::find_sector(std::int64_t k) const {
  if (k < 0 || k >= s_.order()) return std::nullopt;
  const std::int64_t pos = position_[static_cast<std::size_t>(k)];
  if (pos < 0) return std::nullopt;
  return static_cast<std::size_t>(pos);
}

std::size_t StateSpace::index_of(std::int64_t k) const {
  auto idx = find_sector(k);
  if (!idx) throw std::out_of_range("sector " + std::to_string(k) + " not in the state space");
  return *idx;
}

std::span<const std::size_t> StateSpace::with_degree(const Rational& degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end()) return {};
  return it->second;
}

StateSpace build_state_space(const ChainSingularity& s) { return StateSpace(s); }

namespace {

template <typename SectorRange>
std::pair<Rational, Rational> bundle_degrees(const ChainSingularity& s, const SectorRange& sectors) {
  const Rational k(static_cast<std::int64_t>(std::size(sectors)));
  Rational lx = s.weights.x * (k - Rational(2));
  Rational ly = s.weights.y * (k - Rational(2));
  for (const Sector* g : sectors) {
    lx -= g->theta_x;
    ly -= g->theta_y;
  }
  return {lx, ly};
}

}  // namespace

std::pair<Rational, Rational> line_bundle_degrees(const ChainSingularity& s,
                                                  std::span<const std::int64_t> sectors) {
  std::vector<Sector> owned;
  owned.reserve(sectors.size());
  for (std::int64_t k : sectors) owned.push_back(make_sector(s, k));
  std::vector<const Sector*> ptrs;
  for (const auto& g : owned) ptrs.push_back(&g);
  return bundle_degrees(s, ptrs);
}

std::string_view rule_name(CorrelatorRule r) {
  switch (r) {
    case CorrelatorRule::ZeroByDegree: return "ZeroByDegree";
    case CorrelatorRule::ZeroByIntegrality: return "ZeroByIntegrality";
    case CorrelatorRule::Concavity: return "Concavity";
    case CorrelatorRule::IndexZero: return "IndexZero";
    case CorrelatorRule::BroadPairing: return "BroadPairing";
    case CorrelatorRule::BroadChannel: return "BroadChannel";
    case CorrelatorRule::ZeroOther: return "ZeroOther";
  }
  return "?";
}

Correlator3 correlator3(const StateSpace& space, std::size_t a, std::size_t b, std::size_t c) {
  const ChainSingularity& s = space.singularity();
  Correlator3 out{{a, b, c}, Rational(0), CorrelatorRule::ZeroOther};
  const std::array<std::size_t, 3> idx{a, b, c};

  Rational degree_sum(0);
  std::array<std::size_t, 3> narrow_buf{};
  std::size_t narrow_count = 0;
  for (std::size_t i : idx) {
    degree_sum += space[i].degree;
    if (!space[i].broad()) narrow_buf[narrow_count++] = i;
  }
  const std::span<const std::size_t> narrow(narrow_buf.data(), narrow_count);
  if (degree_sum != s.c_hat) {
    out.rule = CorrelatorRule::ZeroByDegree;
    return out;
  }

  switch (narrow.size()) {
    case 0:
      // three broad insertions: 3 c_hat / 2 != c_hat, so the degree test already returned
      out.rule = CorrelatorRule::ZeroByDegree;
      return out;

    case 1:
      if (narrow[0] == space.unit_index()) {
        out.value = Rational(-1, s.q);
        out.rule = CorrelatorRule::BroadPairing;
      }
      return out;

    case 2: {
      const std::int64_t i = space[narrow[0]].sector;
      const std::int64_t j = space[narrow[1]].sector;
      const std::int64_t target = s.coprime() ? s.order() + 1 : s.p - 1;
      if (i + j != target) return out;
      // <e_i, e_j, broad> is forced nonzero by <e_i, e_j, e_i, e_j> = -q,
      // i.e. four-point bundle degrees (-2, 0).
      const Sector* si = &space.sector(narrow[0]);
      const Sector* sj = &space.sector(narrow[1]);
      const std::array<const Sector*, 4> four{si, sj, si, sj};
      const auto [lx, ly] = bundle_degrees(s, four);
      if (!lx.is_integer() || !ly.is_integer()) {
        out.rule = CorrelatorRule::ZeroByIntegrality;
        return out;
      }
      if (lx != Rational(-2) || ly != Rational(0)) return out;
      out.value = Rational(1);
      out.rule = CorrelatorRule::BroadChannel;
      return out;
    }

    default: {
      const std::array<const Sector*, 3> secs{&space.sector(a), &space.sector(b), &space.sector(c)};
      const auto [lx, ly] = bundle_degrees(s, secs);
      if (!lx.is_integer() || !ly.is_integer()) {
        out.rule = CorrelatorRule::ZeroByIntegrality;
      } else if (lx == Rational(-1) && ly == Rational(-1)) {
        out.value = Rational(1);
        out.rule = CorrelatorRule::Concavity;
      } else if (lx == Rational(-2) && ly == Rational(0)) {
        out.value = Rational(-s.q);
        out.rule = CorrelatorRule::IndexZero;
      }
      return out;
    }
  }
}

SparseMatrix pairing(const StateSpace& space) {
  const ChainSingularity& s = space.singularity();
  SparseMatrix eta(space.size(), space.size());
  eta.set(0, 0, Rational(-1, s.q));
  for (std::size_t i = 1; i < space.size(); ++i) {
    if (auto j = space.find_sector(s.order() - space[i].sector)) eta.set(i, *j, Rational(1));
  }
  return eta;
}

FrobeniusAlgebra::FrobeniusAlgebra(StateSpace space)
    : space_(std::move(space)), eta_(pairing(space_)), eta_inv_(0, 0) {
  auto inv = eta_.inverse();
  if (!inv) throw ConsistencyError("pairing is degenerate");
  eta_inv_ = std::move(*inv);

  const std::size_t n = space_.size();
  if (n <= kMaxCachedDimension) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        table_[a * n + b] = compute_product(a, b);
        if (a != b) table_[b * n + a] = table_[a * n + b];
      }
    }
  }
}

LinearCombination FrobeniusAlgebra::compute_product(std::size_t a, std::size_t b) const {
  LinearCombination out;
  // Nonzero correlators satisfy the degree selection, so only alpha with
  // deg alpha = c_hat - deg a - deg b can contribute.
  const Rational need = singularity().c_hat - space_[a].degree - space_[b].degree;
  for (std::size_t alpha : space_.with_degree(need)) {
    const Correlator3 corr = correlator3(space_, a, b, alpha);
    if (!corr.value.is_zero()) out.add_scaled(eta_inv_.row(alpha), corr.value);
  }
  return out;
}

LinearCombination FrobeniusAlgebra::product(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * space_.size() + b];
  return compute_product(a, b);
}

LinearCombination FrobeniusAlgebra::multiply(const LinearCombination& u,
                                             const LinearCombination& v) const {
  LinearCombination out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) out.add_scaled(product(a, b), ca * cb);
  }
  return out;
}

LinearCombination FrobeniusAlgebra::power(const LinearCombination& u, unsigned n) const {
  LinearCombination result = unit();
  for (unsigned i = 0; i < n; ++i) result = multiply(result, u);
  return result;
}

Rational FrobeniusAlgebra::pair(const LinearCombination& u, const LinearCombination& v) const {
  return eta_.bilinear(u, v);
}

std::vector<Correlator3> FrobeniusAlgebra::nonzero_correlators() const {
  std::vector<Correlator3> out;
  const std::size_t n = space_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Rational need = singularity().c_hat - space_[a].degree - space_[b].degree;
      for (std::size_t c : space_.with_degree(need)) {
        if (c < b) continue;
        Correlator3 corr = correlator3(space_, a, b, c);
        if (!corr.value.is_zero()) out.push_back(std::move(corr));
      }
    }
  }
  return out;
}

std::vector<StructureConstant> FrobeniusAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  const std::size_t n = space_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const LinearCombination ab = product(a, b);
      for (const auto& [c, v] : ab.terms()) out.push_back({a, b, c, v});
    }
  }
  return out;
}

CheckResult check_degree_duality(const StateSpace& space) {
  const ChainSingularity& s = space.singularity();
  CheckResult r{"degree duality"};
  ++r.cases;
  if (Rational(2) * space[0].degree != s.c_hat) r.fail("2 deg(broad) != c_hat");
  for (std::size_t i = 1; i < space.size(); ++i) {
    ++r.cases;
    const std::int64_t k = space[i].sector;
    const std::size_t j = space.index_of(s.order() - k);
    if (space[i].degree + space[j].degree != s.c_hat) {
      r.fail("deg e" + std::to_string(k) + " + deg e" + std::to_string(s.order() - k) + " != c_hat");
    }
    const Sector& g = space.sector(i);
    const Sector& h = space.sector(j);
    if (g.iota + h.iota != s.c_hat - Rational(g.fixed_dim)) r.fail("iota duality fails at k=" + std::to_string(k));
  }
  return r;
}

CheckResult check_pairing(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"pairing"};
  const std::size_t n = sp.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ++r.cases;
      const Rational from_corr = correlator3(sp, sp.unit_index(), a, b).value;
      if (from_corr != alg.eta().at(a, b)) {
        r.fail("eta(" + sp[a].label() + "," + sp[b].label() + ") = " + alg.eta().at(a, b).str() +
               " but <unit,.,.> = " + from_corr.str());
      }
    }
  }
  if (!alg.eta().is_symmetric()) r.fail("eta not symmetric");
  if (alg.eta().determinant().is_zero()) r.fail("eta degenerate");
  return r;
}

CheckResult check_commutativity(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"commutativity"};
  for (std::size_t a = 0; a < sp.size(); ++a) {
    for (std::size_t b = a + 1; b < sp.size(); ++b) {
      ++r.cases;
      // recompute both orders from correlators, bypassing the symmetric cache
      LinearCombination ab, ba;
      const Rational need = sp.singularity().c_hat - sp[a].degree - sp[b].degree;
      for (std::size_t alpha : sp.with_degree(need)) {
        ab.add_scaled(alg.eta_inverse().row(alpha), correlator3(sp, a, b, alpha).value);
        ba.add_scaled(alg.eta_inverse().row(alpha), correlator3(sp, b, a, alpha).value);
      }
      if (ab != ba) r.fail(sp[a].label() + "*" + sp[b].label() + " != " + sp[b].label() + "*" + sp[a].label());
      if (ab != alg.product(a, b)) r.fail("cached product differs at " + sp[a].label() + "*" + sp[b].label());
    }
  }
  return r;
}

CheckResult check_associativity(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"associativity"};
  const std::size_t n = sp.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const LinearCombination ab = alg.product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        ++r.cases;
        const LinearCombination left = alg.multiply(ab, LinearCombination::basis(c));
        const LinearCombination right = alg.multiply(LinearCombination::basis(a), alg.product(b, c));
        if (left != right) {
          r.fail("(" + sp[a].label() + "*" + sp[b].label() + ")*" + sp[c].label() + " = " +
                 render(sp, left) + " but " + sp[a].label() + "*(" + sp[b].label() + "*" +
                 sp[c].label() + ") = " + render(sp, right));
        }
      }
    }
  }
  return r;
}

CheckResult check_unit(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"unit law"};
  for (std::size_t a = 0; a < sp.size(); ++a) {
    ++r.cases;
    const LinearCombination ea = LinearCombination::basis(a);
    if (alg.product(alg.unit_index(), a) != ea || alg.product(a, alg.unit_index()) != ea) {
      r.fail("unit*" + sp[a].label() + " = " + render(sp, alg.product(alg.unit_index(), a)));
    }
  }
  return r;
}

CheckResult check_frobenius(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"Frobenius compatibility"};
  const std::size_t n = sp.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const LinearCombination ab = alg.product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        ++r.cases;
        const Rational left = alg.pair(ab, LinearCombination::basis(c));
        const Rational right = alg.pair(LinearCombination::basis(a), alg.product(b, c));
        if (left != right) r.fail("eta(" + sp[a].label() + "*" + sp[b].label() + "," + sp[c].label() + ") mismatch");
      }
    }
  }
  return r;
}

CheckResult check_grading(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"grading"};
  for (std::size_t a = 0; a < sp.size(); ++a) {
    for (std::size_t b = 0; b < sp.size(); ++b) {
      const LinearCombination ab = alg.product(a, b);
      for (const auto& [c, v] : ab.terms()) {
        ++r.cases;
        if (sp[a].degree + sp[b].degree != sp[c].degree) {
          r.fail(sp[a].label() + "*" + sp[b].label() + " has component " + sp[c].label() + " of wrong degree");
        }
      }
    }
  }
  return r;
}

CheckResult check_uniqueness(const FrobeniusAlgebra& alg) {
  const StateSpace& sp = alg.space();
  CheckResult r{"at most one narrow channel"};
  for (std::size_t a = 1; a < sp.size(); ++a) {
    for (std::size_t b = a; b < sp.size(); ++b) {
      ++r.cases;
      std::size_t hits = 0;
      const Rational need = sp.singularity().c_hat - sp[a].degree - sp[b].degree;
      for (std::size_t c : sp.with_degree(need)) {
        if (c != 0 && !correlator3(sp, a, b, c).value.is_zero()) ++hits;
      }
      if (hits > 1) r.fail(triple_label(sp, a, b, 0) + ": " + std::to_string(hits) + " narrow channels");
    }
  }
  return r;
}

std::vector<CheckResult> amodel_checks(const FrobeniusAlgebra& alg) {
  return {check_degree_duality(alg.space()), check_pairing(alg),  check_commutativity(alg),
          check_associativity(alg),          check_unit(alg),     check_frobenius(alg),
          check_grading(alg),                check_uniqueness(alg)};
}

}  // namespace lgm
