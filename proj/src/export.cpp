#include "lgm/export.hpp"

#include <sstream>

namespace lgm {

namespace {

// Grids above this size are listed as nonzero products instead.
constexpr std::size_t kMaxGrid = 32;

template <typename Label>
std::string format_terms(const LinearCombination& v, Label label) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.terms()) {
    Rational mag = c;
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) mag = -c;
    }
    if (mag != Rational(1)) out += mag.pretty() + "*";
    out += label(i);
  }
  return out;
}

Json rational_matrix_entries(const SparseMatrix& m, const auto& label) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r).terms()) {
      entries.push_back({{"a", label(r)}, {"b", label(c)}, {"value", v.str()}});
    }
  }
  return entries;
}

std::string weights_text(const Weights& w) { return "(" + w.x.pretty() + ", " + w.y.pretty() + ")"; }

}  // namespace

std::optional<Format> parse_format(std::string_view token) {
  if (token == "json") return Format::Json;
  if (token == "md" || token == "markdown") return Format::Markdown;
  if (token == "csv") return Format::Csv;
  if (token == "text") return Format::Text;
  return std::nullopt;
}

std::string format_element(const LinearCombination& v, const StateSpace& space) {
  return format_terms(v, [&](std::size_t i) { return space[i].label(); });
}

std::string format_element(const LinearCombination& v, const MilnorRing& ring) {
  return format_terms(v, [&](std::size_t i) { return monomial_label(ring.basis()[i]); });
}

Json ring_to_json(const FrobeniusAlgebra& alg) {
  const StateSpace& space = alg.space();
  const ChainSingularity& s = alg.singularity();
  const auto label = [&](std::size_t i) { return space[i].label(); };

  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "fjrw-ring";
  doc["p"] = s.p;
  doc["q"] = s.q;
  doc["d"] = s.d;
  doc["polynomial"] = s.polynomial.str();
  doc["weights"] = {{"x", s.weights.x.str()}, {"y", s.weights.y.str()}};
  doc["c_hat"] = s.c_hat.str();
  doc["dimension"] = space.size();
  doc["unit"] = label(space.unit_index());

  Json basis = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    basis.push_back({{"label", label(i)},
                     {"sector", space[i].sector},
                     {"narrow", !space[i].broad()},
                     {"degree", space[i].degree.str()}});
  }
  doc["basis"] = std::move(basis);
  doc["pairing"] = rational_matrix_entries(alg.eta(), label);

  Json constants = Json::array();
  for (const auto& sc : alg.structure_constants()) {
    constants.push_back({{"a", label(sc.a)}, {"b", label(sc.b)}, {"c", label(sc.c)}, {"value", sc.value.str()}});
  }
  doc["structure_constants"] = std::move(constants);
  return doc;
}

std::string ring_to_markdown(const FrobeniusAlgebra& alg) {
  const StateSpace& space = alg.space();
  const ChainSingularity& s = alg.singularity();
  const std::size_t n = space.size();
  std::ostringstream md;
  md << "# FJRW ring of " << s.polynomial.str() << "\n\n";
  md << "- p = " << s.p << ", q = " << s.q << ", d = " << s.d << "\n";
  md << "- weights " << weights_text(s.weights) << ", c_hat = " << s.c_hat.pretty() << "\n";
  md << "- dimension " << n << ", unit " << space[space.unit_index()].label() << "\n\n";

  md << "## Basis\n\n| element | degree |\n|---|---|\n";
  for (std::size_t i = 0; i < n; ++i) md << "| " << space[i].label() << " | " << space[i].degree.pretty() << " |\n";

  md << "\n## Pairing\n\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : alg.eta().row(i).terms()) {
      md << "- eta(" << space[i].label() << ", " << space[j].label() << ") = " << v.pretty() << "\n";
    }
  }

  md << "\n## Multiplication\n\n";
  if (n <= kMaxGrid) {
    md << "| * |";
    for (std::size_t j = 0; j < n; ++j) md << " " << space[j].label() << " |";
    md << "\n|---|";
    for (std::size_t j = 0; j < n; ++j) md << "---|";
    md << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      md << "| " << space[i].label() << " |";
      for (std::size_t j = 0; j < n; ++j) md << " " << format_element(alg.product(i, j), space) << " |";
      md << "\n";
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const LinearCombination v = alg.product(i, j);
        if (!v.is_zero()) md << "- " << space[i].label() << " * " << space[j].label() << " = " << format_element(v, space) << "\n";
      }
    }
  }
  return md.str();
}

std::string ring_to_csv(const FrobeniusAlgebra& alg) {
  const StateSpace& space = alg.space();
  std::ostringstream csv;
  csv << "a,b,c,value\n";
  for (const auto& sc : alg.structure_constants()) {
    csv << space[sc.a].label() << "," << space[sc.b].label() << "," << space[sc.c].label() << "," << sc.value.str()
        << "\n";
  }
  return csv.str();
}

Json milnor_to_json(const MilnorRing& ring) {
  const auto label = [&](std::size_t i) { return monomial_label(ring.basis()[i]); };
  const auto [fx, fy] = jacobian(ring.polynomial());

  Json doc;
  doc["schema"] = kSchema;
  doc["kind"] = "milnor-ring";
  doc["polynomial"] = ring.polynomial().str();
  doc["weights"] = {{"x", ring.weights().x.str()}, {"y", ring.weights().y.str()}};
  doc["c_hat"] = ring.c_hat().str();
  doc["mu"] = ring.mu();

  Json basis = Json::array();
  for (std::size_t i = 0; i < ring.mu(); ++i) {
    basis.push_back({{"label", label(i)}, {"degree", weighted_degree(ring.basis()[i], ring.weights()).str()}});
  }
  doc["basis"] = std::move(basis);

  Json relations = Json::array();
  for (const auto& g : ring.ideal_basis()) relations.push_back(g.str());
  doc["jacobian"] = {fx.str(), fy.str()};
  doc["relations"] = std::move(relations);
  doc["socle"] = monomial_label(ring.top_monomial());
  doc["hessian"] = ring.normal_form(hessian_det(ring.polynomial())).str();
  doc["gram"] = rational_matrix_entries(ring.gram_matrix(), label);

  Json products = Json::array();
  for (std::size_t u = 0; u < ring.mu(); ++u) {
    for (std::size_t v = u; v < ring.mu(); ++v) {
      const auto nf = ring.coordinates(TwoVarPoly::monomial(ring.basis()[u] * ring.basis()[v]));
      for (const auto& [w, c] : nf.terms()) {
        products.push_back({{"a", label(u)}, {"b", label(v)}, {"c", label(w)}, {"value", c.str()}});
      }
    }
  }
  doc["structure_constants"] = std::move(products);
  return doc;
}

std::string milnor_to_markdown(const MilnorRing& ring) {
  const std::size_t n = ring.mu();
  const auto label = [&](std::size_t i) { return monomial_label(ring.basis()[i]); };
  const auto [fx, fy] = jacobian(ring.polynomial());
  std::ostringstream md;
  md << "# Milnor ring of " << ring.polynomial().str() << "\n\n";
  md << "- weights " << weights_text(ring.weights()) << ", c_hat = " << ring.c_hat().pretty() << "\n";
  md << "- mu = " << n << ", socle " << label(n - 1) << "\n";
  md << "- Jacobian ideal (" << fx.str() << ", " << fy.str() << ")\n";
  md << "- hess = " << ring.normal_form(hessian_det(ring.polynomial())).str() << " mod Jacobian\n\n";

  md << "## Relations\n\n";
  for (const auto& g : ring.ideal_basis()) md << "- " << g.str() << " = 0\n";

  md << "\n## Basis\n\n| monomial | degree |\n|---|---|\n";
  for (std::size_t i = 0; i < n; ++i) {
    md << "| " << label(i) << " | " << weighted_degree(ring.basis()[i], ring.weights()).pretty() << " |\n";
  }

  md << "\n## Residue pairing\n\n";
  const SparseMatrix gram = ring.gram_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : gram.row(i).terms()) {
      md << "- Res(" << label(i) << " * " << label(j) << ") = " << v.pretty() << "\n";
    }
  }

  md << "\n## Multiplication\n\n";
  const auto product = [&](std::size_t u, std::size_t v) {
    return ring.coordinates(TwoVarPoly::monomial(ring.basis()[u] * ring.basis()[v]));
  };
  if (n <= kMaxGrid) {
    md << "| * |";
    for (std::size_t j = 0; j < n; ++j) md << " " << label(j) << " |";
    md << "\n|---|";
    for (std::size_t j = 0; j < n; ++j) md << "---|";
    md << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      md << "| " << label(i) << " |";
      for (std::size_t j = 0; j < n; ++j) md << " " << format_element(product(i, j), ring) << " |";
      md << "\n";
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const LinearCombination v = product(i, j);
        if (!v.is_zero()) md << "- " << label(i) << " * " << label(j) << " = " << format_element(v, ring) << "\n";
      }
    }
  }
  return md.str();
}

std::string milnor_to_csv(const MilnorRing& ring) {
  const auto label = [&](std::size_t i) { return monomial_label(ring.basis()[i]); };
  std::ostringstream csv;
  csv << "a,b,c,value\n";
  for (std::size_t u = 0; u < ring.mu(); ++u) {
    for (std::size_t v = u; v < ring.mu(); ++v) {
      const LinearCombination uv = ring.coordinates(TwoVarPoly::monomial(ring.basis()[u] * ring.basis()[v]));
      for (const auto& [w, c] : uv.terms()) {
        csv << label(u) << "," << label(v) << "," << label(w) << "," << c.str() << "\n";
      }
    }
  }
  return csv.str();
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json entry = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    out.push_back(std::move(entry));
  }
  return out;
}

Json mirror_report_to_json(const MirrorReport& rep, const StateSpace& space) {
  Json doc = {{"state_dimension", rep.state_dim},
              {"milnor_dimension", rep.milnor_dim},
              {"image_rank", rep.image_rank},
              {"products_checked", rep.products_checked},
              {"product_mismatches", rep.product_mismatches},
              {"relations_hold", rep.relations.holds()},
              {"isomorphism", rep.isomorphism()}};
  if (!rep.first_mismatch.empty()) doc["first_mismatch"] = rep.first_mismatch;
  if (!rep.relations.holds()) {
    doc["relation_witnesses"] = {format_element(rep.relations.first, space),
                                 format_element(rep.relations.second, space)};
  }
  return doc;
}

Json pairing_comparison_to_json(const PairingComparison& cmp) {
  const auto index = [](std::size_t i) { return i; };
  Json doc;
  doc["same_support"] = cmp.same_support;
  doc["ratio"] = cmp.ratio ? Json(cmp.ratio->str()) : Json(nullptr);
  if (cmp.rescaling) {
    doc["rescaling"] = {{"a", cmp.rescaling->first.str()}, {"b", cmp.rescaling->second.str()}};
  } else {
    doc["rescaling"] = nullptr;
  }
  doc["residue_gram"] = rational_matrix_entries(cmp.residue_gram, index);
  doc["pulled_gram"] = rational_matrix_entries(cmp.pulled_gram, index);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lgm
