#include "qsr/radical.hpp"

#include <algorithm>

#include "qsr/error.hpp"

namespace qsr {
namespace {

using nlohmann::json;

json to_json(const ElementSet& s) { return s.members(); }

std::vector<bool> quasi_regular_table(const FiniteRing& ring) {
  std::vector<bool> rqr(ring.order());
  for (Element a = 0; a < ring.order(); ++a) rqr[a] = is_right_quasi_regular(ring, a).has_value();
  return rqr;
}

ElementSet sum_of_quite_superfluous(const IdealLattice& lattice) {
  RightIdeal total = zero_ideal(lattice.ring());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice.is_quite_superfluous(k)) total = sum_ideals(total, lattice[k]);
  }
  return total.members();
}

class Battery {
 public:
  explicit Battery(RadicalReport& report) : report_(report) {}

  void pass(std::string id) { report_.checks.push_back({std::move(id), true, nullptr}); }
  void fail(std::string id, json counterexample) {
    report_.checks.push_back({std::move(id), false, std::move(counterexample)});
  }
  void record(std::string id, const std::optional<json>& counterexample) {
    if (counterexample) {
      fail(std::move(id), *counterexample);
    } else {
      pass(std::move(id));
    }
  }

 private:
  RadicalReport& report_;
};

std::optional<json> check_agreement(const RadicalReport& r) {
  const std::pair<const char*, const ElementSet*> routes[] = {
      {"definition", &r.by_definition},
      {"maximal", &r.by_maximal_ideals},
      {"quite_superfluous", &r.by_quite_superfluous},
      {"eq1", &r.by_principal_quite_superfluous},
      {"eq2", &r.by_principal_superfluous},
  };
  for (Element a = 0; a < r.order; ++a) {
    json membership = json::object();
    bool first = r.by_definition.contains(a);
    bool differs = false;
    for (const auto& [name, set] : routes) {
      membership[name] = set->contains(a);
      differs = differs || set->contains(a) != first;
    }
    if (differs) return json{{"element", a}, {"membership", membership}};
  }
  return std::nullopt;
}

std::optional<json> check_two_sided(const FiniteRing& ring, const ElementSet& radical) {
  std::optional<json> found;
  radical.for_each([&](Element a) {
    for (Element r = 0; r < ring.order() && !found; ++r) {
      if (!radical.contains(ring.mul(a, r))) {
        found = json{{"a", a}, {"r", r}, {"product", "a*r"}};
      } else if (!radical.contains(ring.mul(r, a))) {
        found = json{{"a", a}, {"r", r}, {"product", "r*a"}};
      }
    }
  });
  if (!found && !is_right_ideal(ring, radical)) {
    found = json{{"reason", "not an additive subgroup"}, {"members", to_json(radical)}};
  }
  return found;
}

json ideal_json(const IdealLattice& lattice, std::size_t k) {
  return json{{"ideal", to_json(lattice[k].members())}};
}

}  // namespace

std::optional<Element> is_right_quasi_regular(const FiniteRing& ring, Element a) {
  for (Element x = 0; x < ring.order(); ++x) {
    if (ring.mul(a, x) == ring.add(a, x)) return x;
  }
  return std::nullopt;
}

ElementSet radical_by_definition(const FiniteRing& ring) {
  const auto rqr = quasi_regular_table(ring);
  ElementSet out(ring.order());
  for (Element a = 0; a < ring.order(); ++a) {
    bool all = true;
    for (Element b = 0; b < ring.order() && all; ++b) all = rqr[ring.mul(a, b)];
    if (all) out.insert(a);
  }
  return out;
}

ElementSet radical_by_maximal_ideals(const IdealLattice& lattice) {
  ElementSet out = lattice.ring().all_elements();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice.is_maximal(k) && lattice.regulator(k)) out &= lattice[k].members();
  }
  return out;
}

ElementSet radical_by_quite_superfluous(const IdealLattice& lattice) {
  ElementSet total = sum_of_quite_superfluous(lattice);
  auto ideal = RightIdeal::from_members(lattice.ring(), total);
  if (!ideal || !lattice.is_quite_superfluous(*ideal)) {
    throw Error(Errc::TheoremViolation,
                "sum of quite superfluous right ideals of " + lattice.ring().name() +
                    " is not quite superfluous");
  }
  return total;
}

ElementSet radical_by_principal_quite_superfluous(const IdealLattice& lattice) {
  const FiniteRing& ring = lattice.ring();
  ElementSet out(ring.order());
  for (Element a = 0; a < ring.order(); ++a) {
    if (lattice.is_quite_superfluous(principal(ring, a))) out.insert(a);
  }
  return out;
}

ElementSet radical_by_principal_superfluous(const IdealLattice& lattice) {
  const FiniteRing& ring = lattice.ring();
  std::vector<bool> small(ring.order());
  for (Element x = 0; x < ring.order(); ++x) small[x] = lattice.is_superfluous(principal(ring, x));
  ElementSet out(ring.order());
  for (Element a = 0; a < ring.order(); ++a) {
    bool all = true;
    for (Element s = 0; s < ring.order() && all; ++s) all = small[ring.mul(s, a)];
    if (all) out.insert(a);
  }
  return out;
}

RightIdeal maximal_ideal_avoiding_regulator(const IdealLattice& lattice, const RightIdeal& ideal,
                                            Element regulator) {
  if (&ideal.ring() != &lattice.ring()) {
    throw Error(Errc::RingMismatch, "ideal belongs to another ring");
  }
  if (ideal.is_whole()) throw Error(Errc::NotProper, "ideal is the whole ring");
  if (!is_regulator(ideal, regulator)) {
    throw Error(Errc::NotARegulator,
                "element " + std::to_string(regulator) + " is not a regulator of the ideal");
  }
  const RightIdeal* best = nullptr;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const RightIdeal& m = lattice[k];
    if (!lattice.is_maximal(k) || !ideal.is_subset_of(m) || m.contains(regulator)) continue;
    if (!is_regulator(m, regulator)) continue;
    if (best == nullptr || m.members() < best->members()) best = &m;
  }
  if (best == nullptr) {
    throw Error(Errc::TheoremViolation,
                "no regular maximal right ideal avoids regulator " + std::to_string(regulator) +
                    " in " + lattice.ring().name());
  }
  return *best;
}

bool RadicalReport::all_pass() const {
  return agreement && std::all_of(checks.begin(), checks.end(),
                                  [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* RadicalReport::find(const std::string& id) const {
  for (const CheckRecord& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

RadicalReport verify_ring(const FiniteRing& ring, const VerifyOptions& options) {
  const IdealLattice lattice(ring, options.max_order);
  RadicalReport report;
  report.ring_name = ring.name();
  report.order = ring.order();
  report.unital = ring.is_unital();
  Battery battery(report);

  report.by_definition = radical_by_definition(ring);
  if (options.inject_fault) report.by_definition.toggle(static_cast<Element>(ring.order() - 1));
  report.by_maximal_ideals = radical_by_maximal_ideals(lattice);
  try {
    report.by_quite_superfluous = radical_by_quite_superfluous(lattice);
    battery.pass("quite_superfluous_sum_closed");
  } catch (const Error& e) {
    if (e.code() != Errc::TheoremViolation) throw;
    report.by_quite_superfluous = sum_of_quite_superfluous(lattice);
    battery.fail("quite_superfluous_sum_closed",
                 json{{"sum", to_json(report.by_quite_superfluous)}, {"message", e.what()}});
  }
  report.by_principal_quite_superfluous = radical_by_principal_quite_superfluous(lattice);
  report.by_principal_superfluous = radical_by_principal_superfluous(lattice);

  const auto disagreement = check_agreement(report);
  report.agreement = !disagreement;
  battery.record("five_way_agreement", disagreement);

  const ElementSet& radical = report.by_definition;
  battery.record("radical_two_sided", check_two_sided(ring, radical));

  // The radical is quite superfluous and contains every quite superfluous ideal.
  {
    std::optional<json> cx;
    auto as_ideal = RightIdeal::from_members(ring, radical);
    if (!as_ideal) {
      cx = json{{"reason", "radical is not a right ideal"}};
    } else {
      for (std::size_t k : lattice.proper_regular()) {
        if (sums_to_whole(*as_ideal, lattice[k])) {
          cx = json{{"regular_ideal", to_json(lattice[k].members())},
                    {"regulator", *lattice.regulator(k)}};
          break;
        }
      }
    }
    battery.record("radical_quite_superfluous", cx);
  }
  {
    std::optional<json> cx;
    for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
      if (lattice.is_quite_superfluous(k) && !lattice[k].members().is_subset_of(radical)) {
        cx = ideal_json(lattice, k);
      }
    }
    battery.record("radical_contains_quite_superfluous", cx);
  }
  {
    std::optional<json> cx;
    for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
      const bool inside = lattice[k].members().is_subset_of(radical);
      if (lattice.is_quite_superfluous(k) != inside) {
        cx = ideal_json(lattice, k);
        (*cx)["quite_superfluous"] = lattice.is_quite_superfluous(k);
        (*cx)["in_radical"] = inside;
      }
    }
    battery.record("quite_superfluous_iff_in_radical", cx);
  }

  // Every proper regular ideal, with each of its regulators: e is outside
  // I, e is not right quasi-regular, and a regular maximal M above I avoids e.
  {
    std::optional<json> cx;
    for (std::size_t k : lattice.proper_regular()) {
      const RightIdeal& ideal = lattice[k];
      for (Element e = 0; e < ring.order() && !cx; ++e) {
        if (!is_regulator(ideal, e)) continue;
        json base{{"ideal", to_json(ideal.members())}, {"regulator", e}};
        if (ideal.contains(e)) {
          cx = base;
          (*cx)["reason"] = "regulator lies in the ideal";
        } else if (auto x = is_right_quasi_regular(ring, e)) {
          cx = base;
          (*cx)["reason"] = "regulator is right quasi-regular";
          (*cx)["x"] = *x;
        } else {
          try {
            const RightIdeal m = maximal_ideal_avoiding_regulator(lattice, ideal, e);
            if (!lattice.is_maximal(m) || !ideal.is_subset_of(m) || m.contains(e) ||
                !is_regulator(m, e)) {
              cx = base;
              (*cx)["reason"] = "witness fails its postconditions";
              (*cx)["maximal"] = to_json(m.members());
            }
          } catch (const Error& err) {
            cx = base;
            (*cx)["reason"] = err.what();
          }
        }
      }
      if (cx) break;
    }
    battery.record("regular_maximal_witness", cx);
  }

  {
    const bool whole = radical.is_full();
    const bool no_proper_regular = lattice.proper_regular().empty();
    std::optional<json> cx;
    if (whole != no_proper_regular) {
      cx = json{{"radical_is_whole", whole}, {"no_proper_regular_ideal", no_proper_regular}};
    } else if (whole) {
      for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
        if (!lattice.is_quite_superfluous(k)) {
          cx = ideal_json(lattice, k);
          (*cx)["reason"] = "radical is whole but ideal is not quite superfluous";
        }
      }
    }
    battery.record("radical_whole_iff_no_proper_regular", cx);
  }

  {
    std::optional<json> cx;
    for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
      if (lattice.is_superfluous(k) && !lattice.is_quite_superfluous(k)) cx = ideal_json(lattice, k);
    }
    battery.record("superfluous_implies_quite_superfluous", cx);
  }
  {
    std::optional<json> cx;
    for (std::size_t big = 0; big < lattice.size() && !cx; ++big) {
      if (!lattice.is_quite_superfluous(big)) continue;
      for (std::size_t small = 0; small < lattice.size() && !cx; ++small) {
        if (lattice[small].is_subset_of(lattice[big]) && !lattice.is_quite_superfluous(small)) {
          cx = json{{"quite_superfluous", to_json(lattice[big].members())},
                    {"subideal", to_json(lattice[small].members())}};
        }
      }
    }
    battery.record("quite_superfluous_downward_closed", cx);
  }
  {
    std::optional<json> cx;
    for (Element a = 0; a < ring.order() && !cx; ++a) {
      const bool lhs = report.by_principal_quite_superfluous.contains(a);
      const bool rhs = report.by_principal_superfluous.contains(a);
      if (lhs != rhs) {
        cx = json{{"element", a}, {"principal_quite_superfluous", lhs},
                  {"all_multiples_superfluous", rhs}};
      }
    }
    battery.record("principal_bridge", cx);
  }

  if (ring.is_unital()) {
    auto as_ideal = RightIdeal::from_members(ring, radical);
    std::optional<json> cx;
    if (!as_ideal) {
      cx = json{{"reason", "radical is not a right ideal"}};
    } else if (!lattice.is_superfluous(*as_ideal)) {
      cx = json{{"radical", to_json(radical)}};
    }
    battery.record("unital_radical_superfluous", cx);

    cx.reset();
    for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
      if (lattice.is_superfluous(k) && !lattice[k].members().is_subset_of(radical)) {
        cx = ideal_json(lattice, k);
      }
    }
    battery.record("unital_radical_contains_superfluous", cx);

    cx.reset();
    for (std::size_t k = 0; k < lattice.size() && !cx; ++k) {
      if (lattice.is_superfluous(k) != lattice.is_quite_superfluous(k)) cx = ideal_json(lattice, k);
    }
    battery.record("unital_superfluous_equals_quite_superfluous", cx);
  }

  return report;
}

}  // namespace qsr
