#include "qsr/catalog.hpp"

#include "qsr/constructions.hpp"

namespace qsr {

std::vector<FiniteRing> catalog() {
  std::vector<FiniteRing> rings;
  rings.push_back(make_cyclic(1));
  for (std::size_t n : {2, 3, 4, 6, 8, 9, 12}) rings.push_back(make_cyclic(n));
  for (std::size_t n : {2, 3, 4}) rings.push_back(make_null(n));
  rings.push_back(make_nonunital_ideal(2, 2));
  rings.push_back(make_nonunital_ideal(2, 4));
  rings.push_back(make_nonunital_ideal(3, 3));
  rings.push_back(make_nonunital_ideal(2, 8));
  rings.push_back(make_upper_triangular_z2());
  rings.push_back(direct_product(make_cyclic(2), make_null(2)));
  rings.push_back(direct_product(make_cyclic(4), make_cyclic(3)));
  rings.push_back(make_gf4());
  rings.push_back(make_row_matrices_z2());
  rings.push_back(make_column_matrices_z2());
  rings.push_back(direct_product(make_cyclic(2), make_nonunital_ideal(2, 4)));
  return rings;
}

}  // namespace qsr
