#pragma once

#include <cstddef>

#include "qsr/finite_ring.hpp"

namespace qsr {

/// Z/nZ, unital. Element i is the residue i.
FiniteRing make_cyclic(std::size_t n);

/// The ideal mZ/mnZ of Z/mnZ viewed as a ring in its own right: element i
/// stands for i*m, with arithmetic mod m*n. Requires m >= 2, n >= 1.
FiniteRing make_nonunital_ideal(std::size_t m, std::size_t n);

/// Additive group Z/nZ with every product zero.
FiniteRing make_null(std::size_t n);

/// Componentwise ring on pairs; (i, j) has index i * |S| + j.
/// Throws OrderCapExceeded when |R| * |S| > max_order.
FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s,
                          std::size_t max_order = kValidationOrderCap);

/// Upper-triangular 2x2 matrices over Z/2Z. [[a, b], [0, d]] has index 4a + 2b + d.
FiniteRing make_upper_triangular_z2();

/// Matrices [[a, b], [0, 0]] over Z/2Z (index 2a + b): has left identities
/// but no two-sided identity.
FiniteRing make_row_matrices_z2();

/// Matrices [[a, 0], [b, 0]] over Z/2Z (index 2a + b): the opposite ring of
/// make_row_matrices_z2, with right identities but no left identity.
FiniteRing make_column_matrices_z2();

/// The field with four elements, Z/2Z[w]/(w^2 + w + 1); x + y*w has index x + 2y.
FiniteRing make_gf4();

}  // namespace qsr
