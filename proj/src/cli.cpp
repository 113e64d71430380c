#include "lgm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lgm/amodel.hpp"
#include "lgm/bmodel.hpp"
#include "lgm/export.hpp"
#include "lgm/mirror.hpp"
#include "lgm/singularity.hpp"

namespace lgm {

namespace {

constexpr const char* kUsage =
    "usage: lgmirror info P Q\n"
    "       lgmirror ring P Q [--format json|md|csv] [--out PATH]\n"
    "       lgmirror milnor P Q [--format json|md|csv] [--out PATH]\n"
    "       lgmirror verify P Q [--format text|json] [--out PATH] [--quiet]\n"
    "       lgmirror scan PMAX QMAX [--threads N]\n"
    "exponents P, Q range over 2..64\n";

struct RunConfig {
  std::string command;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string format;
  std::string out_path;
  bool quiet = false;
  unsigned threads = 0;
};

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return kVerified;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << cfg.out_path << "\n";
    return kInvalidInput;
  }
  return kVerified;
}

std::string weights_line(const Weights& w, const Rational& c_hat, std::int64_t mu) {
  return "weights (" + w.x.pretty() + ", " + w.y.pretty() + "), c_hat " + c_hat.pretty() + ", mu " +
         std::to_string(mu);
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ChainSingularity chain = make_chain(cfg.p, cfg.q);
  const DualSingularity dual = make_dual(cfg.p, cfg.q);
  const StateSpace space(chain);
  const GeneratorPair gens = find_generators(space);
  const std::string ade = ade_name(cfg.p, cfg.q);

  std::ostringstream s;
  s << (ade.empty() ? "chain" : ade + "-type chain") << ", d=" << chain.d << ", dim=" << space.size() << ", unit "
    << space[space.unit_index()].label() << ", generators " << space[space.index_of(gens.k_index)].label() << ","
    << space[space.index_of(gens.m_index)].label() << "\n";
  s << "W      = " << chain.polynomial.str() << "\n";
  s << "         " << weights_line(chain.weights, chain.c_hat, chain.mu) << "\n";
  s << "dual W = " << dual.polynomial.str() << "\n";
  s << "         " << weights_line(dual.weights, dual.c_hat, dual.mu) << "\n";
  s << "group  = cyclic of order " << chain.order() << ", sectors indexed by "
    << (chain.coprime() ? "J^k (d = 1)" : "lambda^k (d > 1)") << "\n";
  s << "state  = 1 broad + " << space.size() - 1 << " narrow sectors\n";
  return emit(cfg, s.str(), out, err);
}

int cmd_ring(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FrobeniusAlgebra alg{StateSpace(make_chain(cfg.p, cfg.q))};
  switch (*parse_format(cfg.format)) {
    case Format::Json: return emit(cfg, dump(ring_to_json(alg)), out, err);
    case Format::Csv: return emit(cfg, ring_to_csv(alg), out, err);
    default: return emit(cfg, ring_to_markdown(alg), out, err);
  }
}

int cmd_milnor(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MilnorRing ring(make_dual(cfg.p, cfg.q).polynomial);
  switch (*parse_format(cfg.format)) {
    case Format::Json: {
      Json doc = milnor_to_json(ring);
      doc["p"] = cfg.p;
      doc["q"] = cfg.q;
      return emit(cfg, dump(doc), out, err);
    }
    case Format::Csv: return emit(cfg, milnor_to_csv(ring), out, err);
    default: return emit(cfg, milnor_to_markdown(ring), out, err);
  }
}

std::string correlator_text(const Correlator3& c, const StateSpace& space) {
  return "<" + space[c.insertions[0]].label() + "," + space[c.insertions[1]].label() + "," +
         space[c.insertions[2]].label() + "> = " + c.value.pretty() + " " + std::string(rule_name(c.rule));
}

const CheckResult* first_failure(const std::vector<CheckResult>& checks) {
  auto it = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool json = *parse_format(cfg.format) == Format::Json;
  std::optional<MirrorSetup> setup;
  try {
    setup.emplace(make_mirror_setup(cfg.p, cfg.q));
  } catch (const ConsistencyError& e) {
    err << "verification failed while building the rings: " << e.what() << "\n";
    return kVerificationFailed;
  }
  const StateSpace& space = setup->algebra.space();
  const std::vector<CheckResult> checks = verify_all(*setup);
  const MirrorReport report = verify_isomorphism(*setup);
  const PairingComparison pairing = compare_pairings(*setup);
  const CheckResult* failed = first_failure(checks);
  const auto correlators = setup->algebra.nonzero_correlators();

  std::ostringstream s;
  if (json) {
    Json doc;
    doc["schema"] = kSchema;
    doc["kind"] = "verification";
    doc["p"] = cfg.p;
    doc["q"] = cfg.q;
    doc["d"] = setup->chain.d;
    doc["verified"] = failed == nullptr;
    if (failed) doc["first_failure"] = failed->name + ": " + failed->counterexample;
    doc["generators"] = {space[space.index_of(setup->generators.k_index)].label(),
                         space[space.index_of(setup->generators.m_index)].label()};
    Json log = Json::array();
    for (const auto& c : correlators) {
      log.push_back({{"insertions", {space[c.insertions[0]].label(), space[c.insertions[1]].label(),
                                     space[c.insertions[2]].label()}},
                     {"value", c.value.str()},
                     {"rule", rule_name(c.rule)}});
    }
    doc["correlators"] = std::move(log);
    doc["checks"] = checks_to_json(checks);
    doc["mirror"] = mirror_report_to_json(report, space);
    doc["pairing_comparison"] = pairing_comparison_to_json(pairing);
    s << dump(doc);
  } else {
    s << "verify p=" << cfg.p << " q=" << cfg.q << ": d=" << setup->chain.d << ", dim " << space.size()
      << ", mu(dual) " << setup->dual_ring.mu() << "\n";
    if (!cfg.quiet) {
      s << "nonzero correlators:\n";
      for (const auto& c : correlators) s << "  " << correlator_text(c, space) << "\n";
    }
    s << "checks:\n";
    for (const auto& c : checks) {
      s << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << (c.cases == 1 ? " case)" : " cases)");
      if (!c.passed) s << ": " << c.counterexample;
      s << "\n";
    }
    s << "mirror map: X -> " << format_element(setup->generators.x_image, space) << ", Y -> "
      << format_element(setup->generators.y_image, space) << "; image rank " << report.image_rank << "/"
      << report.state_dim << ", " << report.products_checked - report.product_mismatches << "/"
      << report.products_checked << " products match\n";
    s << "pairing comparison: ";
    if (!pairing.same_support) {
      s << "supports differ\n";
    } else if (!pairing.ratio) {
      s << "ratio residue/eta not constant\n";
    } else {
      s << "residue = " << pairing.ratio->pretty() << " * eta";
      if (pairing.rescaling) {
        s << "; X -> " << pairing.rescaling->first.pretty() << " X, Y -> " << pairing.rescaling->second.pretty()
          << " Y matches them exactly\n";
      } else {
        s << "; no rational rescaling matches them\n";
      }
    }
    s << "verdict: " << (failed ? "FAILED (" + failed->name + ": " + failed->counterexample + ")" : "verified")
      << "\n";
  }
  const int written = emit(cfg, s.str(), out, err);
  if (written != kVerified) return written;
  return failed ? kVerificationFailed : kVerified;
}

struct ScanCell {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool passed = false;
  std::string failure;
};

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ScanCell> cells;
  for (std::int64_t p = kMinExponent; p <= cfg.p; ++p) {
    for (std::int64_t q = kMinExponent; q <= cfg.q; ++q) cells.push_back({p, q, false, {}});
  }
  // Largest cells first so the pool drains evenly.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cells[a].p * cells[a].q > cells[b].p * cells[b].q; });

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      ScanCell& cell = cells[order[i]];
      try {
        const auto checks = verify_all(cell.p, cell.q);
        const CheckResult* failed = first_failure(checks);
        cell.passed = failed == nullptr;
        if (failed) cell.failure = failed->name + ": " + failed->counterexample;
      } catch (const std::exception& e) {
        cell.failure = e.what();
      }
    }
  };
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  std::ostringstream s;
  s << "scan p = 2.." << cfg.p << ", q = 2.." << cfg.q << "\n";
  s << "p\\q";
  for (std::int64_t q = kMinExponent; q <= cfg.q; ++q) s << std::setw(5) << q;
  s << "\n";
  std::size_t passed = 0;
  for (std::int64_t p = kMinExponent; p <= cfg.p; ++p) {
    s << std::setw(3) << p;
    for (std::int64_t q = kMinExponent; q <= cfg.q; ++q) {
      const ScanCell& cell = cells[static_cast<std::size_t>((p - kMinExponent) * (cfg.q - 1) + (q - kMinExponent))];
      s << std::setw(5) << (cell.passed ? "ok" : "FAIL");
      passed += cell.passed;
    }
    s << "\n";
  }
  s << passed << "/" << cells.size() << " cells verified\n";
  for (const auto& cell : cells) {
    if (!cell.passed) s << "  (" << cell.p << "," << cell.q << "): " << cell.failure << "\n";
  }
  const int written = emit(cfg, s.str(), out, err);
  if (written != kVerified) return written;
  return passed == cells.size() ? kVerified : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact checks of Landau-Ginzburg mirror symmetry for chain singularities x^p + x y^q", "lgmirror"};
  app.require_subcommand(1);

  const auto range = CLI::Range(kMinExponent, kMaxExponent);
  const auto add_exponents = [&](CLI::App* sub, const char* first, const char* second) {
    sub->add_option(first, cfg.p, "exponent of x")->required()->check(range);
    sub->add_option(second, cfg.q, "exponent of y")->required()->check(range);
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "write to PATH instead of stdout");
  };

  CLI::App* info = app.add_subcommand("info", "weights, central charge, Milnor numbers and generators");
  add_exponents(info, "P", "Q");

  CLI::App* ring = app.add_subcommand("ring", "FJRW ring of x^P + x y^Q");
  add_exponents(ring, "P", "Q");
  ring->add_option("--format", cfg.format, "json, md or csv")
      ->check(CLI::IsMember({"json", "md", "markdown", "csv"}))
      ->default_val("md");
  add_output(ring);

  CLI::App* milnor = app.add_subcommand("milnor", "Milnor ring of x^P y + y^Q");
  add_exponents(milnor, "P", "Q");
  milnor->add_option("--format", cfg.format, "json, md or csv")
      ->check(CLI::IsMember({"json", "md", "markdown", "csv"}))
      ->default_val("md");
  add_output(milnor);

  CLI::App* verify = app.add_subcommand("verify", "run every check for (P, Q)");
  add_exponents(verify, "P", "Q");
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  verify->add_flag("--quiet", cfg.quiet, "omit the correlator log");
  add_output(verify);

  CLI::App* scan = app.add_subcommand("scan", "verify every 2 <= p <= PMAX, 2 <= q <= QMAX");
  add_exponents(scan, "PMAX", "QMAX");
  scan->add_option("--threads", cfg.threads, "worker threads (0: hardware concurrency)");
  add_output(scan);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n" << kUsage;
    return kInvalidInput;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out, err);
    if (ring->parsed()) return cmd_ring(cfg, out, err);
    if (milnor->parsed()) return cmd_milnor(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    return cmd_scan(cfg, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return kInvalidInput;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace lgm
