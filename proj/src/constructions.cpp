#include "qsr/constructions.hpp"

#include <functional>
#include <string>

#include "qsr/error.hpp"

namespace qsr {
namespace {

Table tabulate(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>(op(a, b));
  return t;
}

// Rings whose elements are bit vectors over Z/2Z; addition is XOR.
FiniteRing from_z2_vectors(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                           std::string name, std::vector<std::string> labels = {}) {
  return validate_ring(n, tabulate(n, [](std::size_t a, std::size_t b) { return a ^ b; }),
                       tabulate(n, mul), std::move(name), std::move(labels));
}

}  // namespace

FiniteRing make_cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::BadTableShape, "make_cyclic requires n >= 1");
  return validate_ring(n, tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                       tabulate(n, [n](std::size_t a, std::size_t b) { return (a * b) % n; }),
                       "Z" + std::to_string(n));
}

FiniteRing make_nonunital_ideal(std::size_t m, std::size_t n) {
  if (m < 2 || n == 0) {
    throw Error(Errc::BadTableShape, "make_nonunital_ideal requires m >= 2 and n >= 1");
  }
  const std::size_t modulus = m * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i * m));
  // (i*m)(j*m) = (i*j*m)*m, so the product has index i*j*m mod n.
  return validate_ring(
      n, tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
      tabulate(n, [m, n](std::size_t a, std::size_t b) { return (a * b * m) % n; }),
      std::to_string(m) + "Z/" + std::to_string(modulus) + "Z", std::move(labels));
}

FiniteRing make_null(std::size_t n) {
  if (n == 0) throw Error(Errc::BadTableShape, "make_null requires n >= 1");
  return validate_ring(n, tabulate(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                       tabulate(n, [](std::size_t, std::size_t) { return std::size_t{0}; }),
                       "null" + std::to_string(n));
}

FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s, std::size_t max_order) {
  const std::size_t m = s.order();
  const std::size_t n = r.order() * m;
  if (n > max_order) {
    throw Error(Errc::OrderCapExceeded, "product order " + std::to_string(n) + " exceeds " +
                                            std::to_string(max_order));
  }
  auto lift = [&](auto op) {
    return tabulate(n, [&](std::size_t a, std::size_t b) {
      const auto [x, y] = op(static_cast<Element>(a / m), static_cast<Element>(b / m),
                             static_cast<Element>(a % m), static_cast<Element>(b % m));
      return std::size_t{x} * m + y;
    });
  };
  const Table add = lift([&](Element x1, Element x2, Element y1, Element y2) {
    return std::pair{r.add(x1, x2), s.add(y1, y2)};
  });
  const Table mul = lift([&](Element x1, Element x2, Element y1, Element y2) {
    return std::pair{r.mul(x1, x2), s.mul(y1, y2)};
  });
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("(" + r.label(static_cast<Element>(i / m)) + "," +
                     s.label(static_cast<Element>(i % m)) + ")");
  }
  return validate_ring(n, add, mul, r.name() + " x " + s.name(), std::move(labels));
}

FiniteRing make_upper_triangular_z2() {
  return from_z2_vectors(
      8,
      [](std::size_t x, std::size_t y) {
        const std::size_t a = x >> 2, b = (x >> 1) & 1, d = x & 1;
        const std::size_t a2 = y >> 2, b2 = (y >> 1) & 1, d2 = y & 1;
        return ((a * a2) << 2) | (((a * b2 + b * d2) & 1) << 1) | (d * d2);
      },
      "UT2(Z2)");
}

FiniteRing make_row_matrices_z2() {
  // [[a, b], [0, 0]] * [[a', b'], [0, 0]] = [[a a', a b'], [0, 0]]
  return from_z2_vectors(
      4,
      [](std::size_t x, std::size_t y) {
        const std::size_t a = x >> 1;
        return ((a * (y >> 1)) << 1) | (a * (y & 1));
      },
      "RowMat2(Z2)");
}

FiniteRing make_column_matrices_z2() {
  // [[a, 0], [b, 0]] * [[a', 0], [b', 0]] = [[a a', 0], [b a', 0]]
  return from_z2_vectors(
      4,
      [](std::size_t x, std::size_t y) {
        const std::size_t a2 = y >> 1;
        return (((x >> 1) * a2) << 1) | ((x & 1) * a2);
      },
      "ColMat2(Z2)");
}

FiniteRing make_gf4() {
  // (x0 + x1 w)(y0 + y1 w) with w^2 = w + 1
  return from_z2_vectors(
      4,
      [](std::size_t x, std::size_t y) {
        const std::size_t x0 = x & 1, x1 = x >> 1, y0 = y & 1, y1 = y >> 1;
        const std::size_t c0 = (x0 * y0 + x1 * y1) & 1;
        const std::size_t c1 = (x0 * y1 + x1 * y0 + x1 * y1) & 1;
        return c0 | (c1 << 1);
      },
      "GF4", {"0", "1", "w", "1+w"});
}

}  // namespace qsr
