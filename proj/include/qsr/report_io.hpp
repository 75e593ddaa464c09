#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qsr/ideal_lattice.hpp"
#include "qsr/radical.hpp"

namespace qsr {

// Report schema, one object per ring:
//   {"name": str, "order": int, "unital": bool, "agreement": bool,
//    "radical": {"definition": [int], "maximal": [int],
//                "quite_superfluous": [int], "eq1": [int], "eq2": [int]},
//    "checks": [{"id": str, "pass": bool, "counterexample"?: object}]}
// Member sets are ascending index arrays.

nlohmann::json report_to_json(const RadicalReport& report);

/// Inverse of report_to_json; throws ParseError on schema violations.
RadicalReport report_from_json(const nlohmann::json& doc);

/// One row per right ideal: members, regulator (or null), maximal,
/// superfluous, quite_superfluous.
nlohmann::json lattice_to_json(const IdealLattice& lattice);

/// Stable text rendering used by `verify` without --json.
std::string report_to_text(const RadicalReport& report);

}  // namespace qsr
