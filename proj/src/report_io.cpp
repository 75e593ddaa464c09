#include "qsr/report_io.hpp"

#include <sstream>

#include "qsr/error.hpp"

namespace qsr {

using nlohmann::json;

namespace {

ElementSet set_from_json(const json& doc, const char* key, std::size_t order) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(Errc::ParseError, std::string("radical.") + key + " must be an array");
  }
  ElementSet s(order);
  for (const json& v : doc[key]) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= order) {
      throw Error(Errc::ParseError, std::string("radical.") + key + " has a bad element");
    }
    s.insert(v.get<Element>());
  }
  return s;
}

std::string braces(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](Element e) {
    os << (first ? "" : ",") << e;
    first = false;
  });
  os << "}";
  return os.str();
}

}  // namespace

json report_to_json(const RadicalReport& report) {
  json checks = json::array();
  for (const CheckRecord& c : report.checks) {
    json entry{{"id", c.id}, {"pass", c.pass}};
    if (!c.counterexample.is_null()) entry["counterexample"] = c.counterexample;
    checks.push_back(std::move(entry));
  }
  return json{
      {"name", report.ring_name},
      {"order", report.order},
      {"unital", report.unital},
      {"agreement", report.agreement},
      {"radical",
       {{"definition", report.by_definition.members()},
        {"maximal", report.by_maximal_ideals.members()},
        {"quite_superfluous", report.by_quite_superfluous.members()},
        {"eq1", report.by_principal_quite_superfluous.members()},
        {"eq2", report.by_principal_superfluous.members()}}},
      {"checks", std::move(checks)},
  };
}

RadicalReport report_from_json(const json& doc) {
  try {
    RadicalReport r;
    r.ring_name = doc.at("name").get<std::string>();
    r.order = doc.at("order").get<std::size_t>();
    r.unital = doc.at("unital").get<bool>();
    r.agreement = doc.at("agreement").get<bool>();
    const json& rad = doc.at("radical");
    r.by_definition = set_from_json(rad, "definition", r.order);
    r.by_maximal_ideals = set_from_json(rad, "maximal", r.order);
    r.by_quite_superfluous = set_from_json(rad, "quite_superfluous", r.order);
    r.by_principal_quite_superfluous = set_from_json(rad, "eq1", r.order);
    r.by_principal_superfluous = set_from_json(rad, "eq2", r.order);
    for (const json& c : doc.at("checks")) {
      r.checks.push_back({c.at("id").get<std::string>(), c.at("pass").get<bool>(),
                          c.contains("counterexample") ? c["counterexample"] : json(nullptr)});
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

json lattice_to_json(const IdealLattice& lattice) {
  json rows = json::array();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const auto reg = lattice.regulator(k);
    rows.push_back(json{
        {"members", lattice[k].members().members()},
        {"regular", reg.has_value()},
        {"regulator", reg ? json(*reg) : json(nullptr)},
        {"maximal", lattice.is_maximal(k)},
        {"superfluous", lattice.is_superfluous(k)},
        {"quite_superfluous", lattice.is_quite_superfluous(k)},
    });
  }
  return json{{"name", lattice.ring().name()}, {"order", lattice.ring().order()},
              {"ideals", std::move(rows)}};
}

std::string report_to_text(const RadicalReport& report) {
  std::ostringstream os;
  os << report.ring_name << " (order " << report.order << ", "
     << (report.unital ? "unital" : "non-unital") << ")\n";
  os << "  definition        " << braces(report.by_definition) << "\n";
  os << "  maximal           " << braces(report.by_maximal_ideals) << "\n";
  os << "  quite_superfluous " << braces(report.by_quite_superfluous) << "\n";
  os << "  eq1               " << braces(report.by_principal_quite_superfluous) << "\n";
  os << "  eq2               " << braces(report.by_principal_superfluous) << "\n";
  os << "  agreement         " << (report.agreement ? "yes" : "NO") << "\n";
  for (const CheckRecord& c : report.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id;
    if (!c.pass) os << " " << c.counterexample.dump();
    os << "\n";
  }
  return os.str();
}

}  // namespace qsr
