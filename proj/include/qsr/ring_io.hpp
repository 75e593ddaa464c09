#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qsr/finite_ring.hpp"

namespace qsr {

// Ring file format (UTF-8 JSON):
//   {"name": str, "order": int, "add": [[int]], "mul": [[int]], "labels": [str]?}
// Tables are row-major by left operand. If the additive identity is not at
// index 0 the loader swaps it into place before validation.

/// Parses and validates a ring document. Throws ParseError for malformed
/// JSON, schema violations or out-of-range entries, and any validate_ring
/// error otherwise.
FiniteRing load_ring(std::string_view text);

/// Reads `path` and calls load_ring. Unreadable files raise ParseError.
FiniteRing load_ring_file(const std::filesystem::path& path);

/// Serialises a ring with one table row per line; load_ring(save_ring(r))
/// reproduces r exactly.
std::string save_ring(const FiniteRing& ring);

}  // namespace qsr
