#pragma once

#include <vector>

#include "qsr/finite_ring.hpp"

namespace qsr {

/// The fixed, order-stable list of test rings. It covers unital and
/// non-unital, nilpotent and semisimple, commutative and non-commutative
/// rings so that J(R) = 0, J(R) = R and 0 < J(R) < R all occur.
std::vector<FiniteRing> catalog();

}  // namespace qsr
