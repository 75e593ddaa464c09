#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsr/constructions.hpp"
#include "qsr/error.hpp"
#include "qsr/finite_ring.hpp"

using qsr::Errc;
using qsr::Table;

namespace {

Table mod_table(std::size_t n, auto op) {
  Table t(n, std::vector<qsr::Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<qsr::Element>(op(a, b) % n);
  return t;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const qsr::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

}  // namespace

TEST(ValidateRing, ZeroRingIsItsOwnUnity) {
  const auto r = qsr::validate_ring(1, {{0}}, {{0}}, "zero");
  EXPECT_EQ(r.order(), 1u);
  ASSERT_TRUE(r.unity());
  EXPECT_EQ(*r.unity(), 0u);
}

TEST(ValidateRing, NullRingOfOrderTwo) {
  const auto r = qsr::validate_ring(2, mod_table(2, [](auto a, auto b) { return a + b; }),
                                    {{0, 0}, {0, 0}}, "null2");
  EXPECT_FALSE(r.is_unital());
}

TEST(ValidateRing, ShiftedProductIsNotDistributive) {
  const Table add = mod_table(4, [](auto a, auto b) { return a + b; });
  const Table mul = mod_table(4, [](auto a, auto b) { return a * b + 1; });

  oracle::RawTable radd, rmul;
  for (const auto& row : add) radd.emplace_back(row.begin(), row.end());
  for (const auto& row : mul) rmul.emplace_back(row.begin(), row.end());
  const auto first = oracle::first_distributive_violation(radd, rmul);
  ASSERT_TRUE(first);
  EXPECT_EQ(*first, std::make_tuple(0u, 0u, 0u));

  try {
    qsr::validate_ring(4, add, mul, "bad");
    FAIL() << "expected NotDistributive";
  } catch (const qsr::Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDistributive);
    EXPECT_NE(std::string(e.what()).find("(0, 0, 0)"), std::string::npos) << e.what();
  }
}

TEST(ValidateRing, RejectsBadShapes) {
  EXPECT_EQ(code_of([] { qsr::validate_ring(2, {{0, 1}}, {{0, 0}, {0, 0}}, "x"); }),
            Errc::BadTableShape);
  EXPECT_EQ(code_of([] { qsr::validate_ring(2, {{0, 1}, {1, 0}}, {{0, 0}, {0, 2}}, "x"); }),
            Errc::BadTableShape);
  EXPECT_EQ(code_of([] { qsr::validate_ring(0, {}, {}, "x"); }), Errc::BadTableShape);
  EXPECT_EQ(code_of([] {
              qsr::validate_ring(2, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}, "x", {"only one"});
            }),
            Errc::BadTableShape);
}

TEST(ValidateRing, RejectsNonGroupAddition) {
  // identity not at 0
  EXPECT_EQ(code_of([] { qsr::validate_ring(2, {{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}, "x"); }),
            Errc::NotAbelianGroup);
  // no negative for 1 (addition is max)
  EXPECT_EQ(code_of([] { qsr::validate_ring(2, {{0, 1}, {1, 1}}, {{0, 0}, {0, 0}}, "x"); }),
            Errc::NotAbelianGroup);
  // not commutative
  EXPECT_EQ(code_of([] {
              qsr::validate_ring(3, {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}}, mod_table(3, [](auto, auto) { return 0; }), "x");
            }),
            Errc::NotAbelianGroup);
}

TEST(ValidateRing, RejectsNonAssociativeProduct) {
  // Z_2 x Z_2 (index 2*x1 + x2) with the bilinear product x*y = (x1 y2, x1 y1):
  // distributive but not associative.
  const Table add = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Table mul(4, std::vector<qsr::Element>(4));
  for (unsigned x = 0; x < 4; ++x)
    for (unsigned y = 0; y < 4; ++y) {
      const unsigned x1 = x >> 1, y1 = y >> 1, y2 = y & 1;
      mul[x][y] = 2 * (x1 & y2) + (x1 & y1);
    }
  EXPECT_EQ(code_of([&] { qsr::validate_ring(4, add, mul, "nonassoc"); }), Errc::NotAssociative);
}

TEST(ValidateRing, OrderCap) {
  EXPECT_EQ(code_of([] { qsr::make_null(qsr::kValidationOrderCap + 1); }), Errc::OrderCapExceeded);
}

TEST(Constructions, Cyclic) {
  const auto z4 = qsr::make_cyclic(4);
  EXPECT_EQ(z4.order(), 4u);
  EXPECT_EQ(z4.unity(), 1u);
  EXPECT_EQ(z4.mul(3, 3), 1u);
  const auto z1 = qsr::make_cyclic(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.unity(), 0u);
  EXPECT_EQ(qsr::make_cyclic(6).order(), 6u);
}

TEST(Constructions, NonunitalIdeal) {
  const auto r = qsr::make_nonunital_ideal(2, 4);
  EXPECT_EQ(r.name(), "2Z/8Z");
  EXPECT_EQ(r.order(), 4u);
  EXPECT_FALSE(r.is_unital());
  // index 1 is 2, index 3 is 6: 2*6 = 12 = 4 mod 8, index 2
  EXPECT_EQ(r.mul(1, 3), 2u);
  EXPECT_EQ(r.label(3), "6");

  // Independent unity scan over the raw tables.
  const auto raw = oracle::raw(r);
  for (unsigned u = 0; u < raw.n; ++u) {
    bool unit = true;
    for (unsigned a = 0; a < raw.n; ++a) unit = unit && raw.mul[u][a] == a && raw.mul[a][u] == a;
    EXPECT_FALSE(unit) << u;
  }

  EXPECT_EQ(qsr::make_nonunital_ideal(2, 1).order(), 1u);

  const auto r9 = qsr::make_nonunital_ideal(3, 3);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c) EXPECT_EQ(r9.mul(r9.mul(a, b), c), 0u);

  // 3Z/6Z is a copy of Z_2 and the scan finds its unity 3.
  EXPECT_EQ(qsr::make_nonunital_ideal(3, 2).unity(), 1u);
}

TEST(Constructions, NullRings) {
  for (std::size_t n : {1, 3, 4}) {
    const auto r = qsr::make_null(n);
    EXPECT_EQ(r.order(), n);
    for (qsr::Element a = 0; a < n; ++a)
      for (qsr::Element b = 0; b < n; ++b) EXPECT_EQ(r.mul(a, b), 0u);
    EXPECT_EQ(r.is_unital(), n == 1);
  }
}

TEST(Constructions, DirectProduct) {
  const auto p = qsr::direct_product(qsr::make_cyclic(2), qsr::make_cyclic(3));
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE(p.is_unital());

  const auto z = qsr::direct_product(qsr::make_cyclic(1), qsr::make_cyclic(4));
  EXPECT_EQ(z.order(), 4u);
  EXPECT_EQ(z.add_table(), qsr::make_cyclic(4).add_table());
  EXPECT_EQ(z.mul_table(), qsr::make_cyclic(4).mul_table());

  const auto q = qsr::direct_product(qsr::make_null(2), qsr::make_cyclic(2));
  EXPECT_EQ(q.order(), 4u);
  EXPECT_FALSE(q.is_unital());

  EXPECT_EQ(code_of([] { qsr::direct_product(qsr::make_cyclic(8), qsr::make_cyclic(9), 64); }),
            Errc::OrderCapExceeded);
}

TEST(Constructions, MatrixRings) {
  const auto ut = qsr::make_upper_triangular_z2();
  EXPECT_EQ(ut.order(), 8u);
  EXPECT_EQ(ut.unity(), 5u);  // [[1,0],[0,1]]

  const auto row = qsr::make_row_matrices_z2();
  EXPECT_FALSE(row.is_unital());
  for (qsr::Element a = 0; a < 4; ++a) EXPECT_EQ(row.mul(2, a), a);  // [[1,0],[0,0]] is a left identity

  const auto col = qsr::make_column_matrices_z2();
  EXPECT_FALSE(col.is_unital());
  for (qsr::Element a = 0; a < 4; ++a) EXPECT_EQ(col.mul(a, 2), a);  // right identity

  EXPECT_TRUE(qsr::make_gf4().is_unital());
}

TEST(Constructions, RevalidateOwnTables) {
  for (const auto& r : {qsr::make_cyclic(12), qsr::make_null(4), qsr::make_nonunital_ideal(2, 8),
                        qsr::make_upper_triangular_z2(), qsr::make_gf4(),
                        qsr::direct_product(qsr::make_cyclic(2), qsr::make_null(2))}) {
    const auto again = qsr::validate_ring(r.order(), r.add_table(), r.mul_table(), r.name(), r.labels());
    EXPECT_EQ(again, r) << r.name();
  }
}
