#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsr/catalog.hpp"
#include "qsr/error.hpp"
#include "qsr/ideal_lattice.hpp"
#include "qsr/localized_rational.hpp"
#include "qsr/radical.hpp"
#include "qsr/report_io.hpp"
#include "qsr/ring_io.hpp"

namespace qring {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  bool json = false;
  std::string out_dir;
  std::size_t max_order = qsr::kLatticeOrderCap;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  bool show_ideals = false;
  bool use_catalog = false;
  std::vector<std::string> paths;
};

std::string set_text(const qsr::ElementSet& s) {
  std::string text = "{";
  bool first = true;
  s.for_each([&](qsr::Element e) {
    text += (first ? "" : ",") + std::to_string(e);
    first = false;
  });
  return text + "}";
}

std::string file_stem(const std::string& name) {
  std::string stem;
  for (char c : name) stem += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return stem;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const qsr::FiniteRing ring = qsr::load_ring_file(opt.paths.at(0));
  out << "name: " << ring.name() << "\n";
  out << "order: " << ring.order() << "\n";
  if (ring.unity()) {
    out << "unital: yes (unity " << *ring.unity() << ")\n";
  } else {
    out << "unital: no\n";
  }
  if (opt.show_ideals) {
    const qsr::IdealLattice lattice(ring, opt.max_order);
    out << "right ideals: " << lattice.size() << "\n";
    for (const qsr::RightIdeal& ideal : lattice.ideals()) {
      out << "  " << ideal.size() << " elements " << set_text(ideal.members()) << "\n";
    }
  }
  return kOk;
}

int cmd_ideals(const Options& opt, std::ostream& out) {
  const qsr::FiniteRing ring = qsr::load_ring_file(opt.paths.at(0));
  const qsr::IdealLattice lattice(ring, opt.max_order);
  if (opt.json) {
    out << qsr::lattice_to_json(lattice).dump(2) << "\n";
    return kOk;
  }
  out << ring.name() << ": " << lattice.size() << " right ideals\n";
  out << std::left << std::setw(28) << "members" << std::setw(12) << "regulator" << std::setw(9)
      << "maximal" << std::setw(13) << "superfluous"
      << "quite_superfluous\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const auto reg = lattice.regulator(k);
    out << std::left << std::setw(28) << set_text(lattice[k].members()) << std::setw(12)
        << (reg ? std::to_string(*reg) : "-") << std::setw(9) << yn(lattice.is_maximal(k))
        << std::setw(13) << yn(lattice.is_superfluous(k)) << yn(lattice.is_quite_superfluous(k))
        << "\n";
  }
  return kOk;
}

int cmd_radical(const Options& opt, std::ostream& out) {
  const qsr::FiniteRing ring = qsr::load_ring_file(opt.paths.at(0));
  const qsr::RadicalReport report =
      qsr::verify_ring(ring, {.max_order = opt.max_order, .inject_fault = opt.inject_fault});
  if (opt.json) {
    json doc = qsr::report_to_json(report);
    doc.erase("checks");
    out << doc.dump(2) << "\n";
  } else {
    out << ring.name() << "\n";
    out << "  definition        " << set_text(report.by_definition) << "\n";
    out << "  maximal           " << set_text(report.by_maximal_ideals) << "\n";
    out << "  quite_superfluous " << set_text(report.by_quite_superfluous) << "\n";
    out << "  eq1               " << set_text(report.by_principal_quite_superfluous) << "\n";
    out << "  eq2               " << set_text(report.by_principal_superfluous) << "\n";
    out << "agreement: " << (report.agreement ? "yes" : "no") << "\n";
  }
  return report.agreement ? kOk : kCheckFailed;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.paths.empty() && !opt.use_catalog) {
    err << "verify: give ring files or --catalog\n";
    return kUsageError;
  }
  std::vector<qsr::FiniteRing> rings;
  if (opt.use_catalog) rings = qsr::catalog();
  for (const std::string& p : opt.paths) rings.push_back(qsr::load_ring_file(p));

  const qsr::VerifyOptions vopt{.max_order = opt.max_order, .inject_fault = opt.inject_fault};
  std::vector<std::future<qsr::RadicalReport>> tasks;
  tasks.reserve(rings.size());
  for (const qsr::FiniteRing& ring : rings) {
    tasks.push_back(std::async(std::launch::async, [&ring, vopt] { return qsr::verify_ring(ring, vopt); }));
  }
  std::vector<qsr::RadicalReport> reports;
  for (auto& t : tasks) reports.push_back(t.get());

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.all_pass();

  if (!opt.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) {
      err << "cannot create " << opt.out_dir << ": " << ec.message() << "\n";
      return kUsageError;
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::ostringstream stem;
      stem << std::setw(2) << std::setfill('0') << i << "_" << file_stem(reports[i].ring_name);
      const fs::path path = fs::path(opt.out_dir) / (stem.str() + ".json");
      std::ofstream file(path, std::ios::binary);
      file << qsr::report_to_json(reports[i]).dump(2) << "\n";
      if (!file) {
        err << "cannot write " << path.string() << "\n";
        return kUsageError;
      }
    }
  }
  if (opt.json) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(qsr::report_to_json(r));
    out << all.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << qsr::report_to_text(r);
    out << reports.size() << " rings, " << (all_pass ? "all checks pass" : "CHECK FAILURES")
        << "\n";
  }
  return all_pass ? kOk : kCheckFailed;
}

// Reproducible sampling; only uses the raw engine output so the sequence
// does not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  long unit_denominator() {
    for (;;) {
      const long t = integer(1, 999);
      if (t % 2 != 0 && t % 3 != 0) return t;
    }
  }
  qsr::LR element() { return qsr::LR::make(integer(-999, 999), unit_denominator()); }
  qsr::LR multiple_of(long m) { return qsr::LR::make(m * integer(-999, 999), unit_denominator()); }

 private:
  std::mt19937_64 engine_;
};

int cmd_qdemo(const Options& opt, std::ostream& out) {
  using qsr::LR;
  Sampler rng(opt.seed);
  bool ok = true;
  bool first_check = true;
  auto check = [&](bool claim) {
    if (first_check && opt.inject_fault) claim = !claim;
    first_check = false;
    ok = ok && claim;
    return claim ? "ok" : "FAILED";
  };

  out << "Q = {s/t : gcd(t, 6) = 1}, R0 = (2), seed " << opt.seed << "\n\n";
  out << "(i) members a of (6): a*b right quasi-regular for 20 sampled b\n";
  std::vector<LR> bs;
  for (int i = 0; i < 20; ++i) bs.push_back(rng.element());
  for (int i = 0; i < 20; ++i) {
    const LR a = rng.multiple_of(6);
    bool all = true;
    for (const LR& b : bs) all = all && qsr::lr_is_rqr(a * b);
    out << "  a = " << std::setw(12) << a.str() << "  in (6): " << check(qsr::jq_member(a))
        << "  all 20 products rqr: " << check(all) << "\n";
  }

  out << "\n(ii) elements outside (6) and a b with a*b not right quasi-regular\n";
  for (const LR& a : {LR::make(2, 1), LR::make(3, 1), LR::make(2, 7), LR::make(3, 5)}) {
    const long b = qsr::non_rqr_counterexample(a);
    const LR one_minus = LR::integer(1) - a * LR::integer(b);
    out << "  a = " << std::setw(6) << a.str() << "  b = " << b << "  1 - ab = " << std::setw(8)
        << one_minus.str() << "  not a unit: " << check(!qsr::lr_is_unit(one_minus)) << "\n";
  }

  out << "\n(iii) a = 3a - 2a with 3a in (6) = J(R0) and 2a in (4)\n";
  for (int i = 0; i < 10; ++i) {
    const LR a = rng.multiple_of(2);
    const auto [u, v] = qsr::decompose_witness(a);
    const bool exact = u - v == a && qsr::lr_in_ideal(u, qsr::kSix) &&
                       qsr::lr_in_ideal(v, qsr::kFour);
    out << "  a = " << std::setw(12) << a.str() << " = " << u.str() << " - " << v.str() << "  "
        << check(exact);
    if (!a.is_zero() && qsr::valuation(a.num(), 2) == 1) {
      out << "  a not in (4): " << check(!qsr::lr_in_ideal(a, qsr::kFour));
    }
    out << "\n";
  }
  const LR two = LR::integer(2);
  out << "  2/1 in (2): " << check(qsr::lr_in_ideal(two, qsr::kR0))
      << "  2/1 in (4): " << (qsr::lr_in_ideal(two, qsr::kFour) ? "yes" : "no")
      << "  so (4) is proper: " << check(!qsr::lr_in_ideal(two, qsr::kFour)) << "\n";
  out << "\nJ(R0) + (4) = R0 with (4) proper: J(R0) is not superfluous\n";
  out << (ok ? "all checks pass" : "CHECK FAILURES") << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobson radical and right-ideal verifier for finite rings"};
  app.require_subcommand(1);
  Options opt;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-order", opt.max_order, "Order cap for lattice enumeration")
        ->capture_default_str();
  };
  auto add_fault = [&](CLI::App* sub) {
    sub->add_flag("--inject-fault", opt.inject_fault, "Corrupt one result (harness self-test)")
        ->group("");
  };

  CLI::App* validate = app.add_subcommand("validate", "Load and validate a ring file");
  validate->add_option("file", opt.paths, "Ring file")->required()->expected(1);
  validate->add_flag("--ideals", opt.show_ideals, "List the right ideals");
  add_cap(validate);

  CLI::App* ideals = app.add_subcommand("ideals", "Classify every right ideal");
  ideals->add_option("file", opt.paths, "Ring file")->required()->expected(1);
  ideals->add_flag("--json", opt.json, "JSON output");
  add_cap(ideals);

  CLI::App* radical = app.add_subcommand("radical", "Compute the radical five ways");
  radical->add_option("file", opt.paths, "Ring file")->required()->expected(1);
  radical->add_flag("--json", opt.json, "JSON output");
  add_cap(radical);
  add_fault(radical);

  CLI::App* verify = app.add_subcommand("verify", "Run the full check battery");
  verify->add_option("files", opt.paths, "Ring files");
  verify->add_flag("--catalog", opt.use_catalog, "Verify the built-in catalog");
  verify->add_flag("--json", opt.json, "JSON reports on stdout");
  verify->add_option("--out", opt.out_dir, "Write one JSON report per ring into DIR");
  add_cap(verify);
  add_fault(verify);

  CLI::App* qdemo = app.add_subcommand("qdemo", "Exact-arithmetic demo in Q and R0 = (2)");
  qdemo->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
  add_fault(qdemo);

  CLI::App* export_catalog = app.add_subcommand("catalog", "Write the catalog rings as ring files");
  export_catalog->add_option("dir", opt.out_dir, "Output directory")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (ideals->parsed()) return cmd_ideals(opt, out);
    if (radical->parsed()) return cmd_radical(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (qdemo->parsed()) return cmd_qdemo(opt, out);
    if (export_catalog->parsed()) {
      fs::create_directories(opt.out_dir);
      const auto rings = qsr::catalog();
      for (std::size_t i = 0; i < rings.size(); ++i) {
        std::ofstream file(fs::path(opt.out_dir) / (file_stem(rings[i].name()) + ".json"),
                           std::ios::binary);
        file << qsr::save_ring(rings[i]);
      }
      out << "wrote " << rings.size() << " rings to " << opt.out_dir << "\n";
      return kOk;
    }
  } catch (const qsr::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qring
