#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsr/element_set.hpp"
#include "qsr/finite_ring.hpp"
#include "qsr/ideal.hpp"
#include "qsr/ideal_lattice.hpp"

namespace qsr {

/// Smallest-index x with a*x = a + x, if one exists.
std::optional<Element> is_right_quasi_regular(const FiniteRing& ring, Element a);

/// {a : a*b is right quasi-regular for every b}.
ElementSet radical_by_definition(const FiniteRing& ring);

/// Intersection of the regular maximal right ideals; R when there are none.
ElementSet radical_by_maximal_ideals(const IdealLattice& lattice);

/// Sum of all quite superfluous right ideals. Throws TheoremViolation if
/// the sum is not itself quite superfluous.
ElementSet radical_by_quite_superfluous(const IdealLattice& lattice);

/// {a : the principal right ideal (a) is quite superfluous}.
ElementSet radical_by_principal_quite_superfluous(const IdealLattice& lattice);

/// {a : (s*a) is superfluous for every s}.
ElementSet radical_by_principal_superfluous(const IdealLattice& lattice);

/// A regular maximal right ideal M with I contained in M and e not in M,
/// having e as a regulator. Picks the smallest such M in ElementSet order.
///
/// Throws NotProper when I = R, NotARegulator when e does not regulate I,
/// and TheoremViolation when the lattice holds no such M.
RightIdeal maximal_ideal_avoiding_regulator(const IdealLattice& lattice, const RightIdeal& ideal,
                                            Element regulator);

/// One entry of the theorem battery. `counterexample` is null on success.
struct CheckRecord {
  std::string id;
  bool pass = true;
  nlohmann::json counterexample;
};

struct RadicalReport {
  std::string ring_name;
  std::size_t order = 0;
  bool unital = false;

  ElementSet by_definition;
  ElementSet by_maximal_ideals;
  ElementSet by_quite_superfluous;
  ElementSet by_principal_quite_superfluous;
  ElementSet by_principal_superfluous;

  /// True iff all five member sets coincide.
  bool agreement = false;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  const CheckRecord* find(const std::string& id) const;
};

struct VerifyOptions {
  std::size_t max_order = kLatticeOrderCap;
  /// Corrupts the by-definition radical so the harness can prove it notices.
  bool inject_fault = false;
};

/// Computes the radical five ways and runs the full theorem battery.
/// Mathematical failures are recorded in the report; only OrderCapExceeded
/// is thrown.
RadicalReport verify_ring(const FiniteRing& ring, const VerifyOptions& options = {});

}  // namespace qsr
