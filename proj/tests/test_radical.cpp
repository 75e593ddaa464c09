#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qsr/catalog.hpp"
#include "qsr/constructions.hpp"
#include "qsr/error.hpp"
#include "qsr/radical.hpp"

using qsr::Element;
using qsr::ElementSet;

namespace {

oracle::Set as_set(const ElementSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

qsr::RightIdeal ideal(const qsr::FiniteRing& r, std::vector<Element> members) {
  return *qsr::RightIdeal::from_members(r, ElementSet::from_members(r.order(), members));
}

}  // namespace

TEST(RightQuasiRegular, Examples) {
  for (const auto& r : qsr::catalog()) EXPECT_EQ(qsr::is_right_quasi_regular(r, 0), 0u);
  const auto z4 = qsr::make_cyclic(4);
  EXPECT_EQ(qsr::is_right_quasi_regular(z4, 2), 2u);
  EXPECT_EQ(oracle::rqr(oracle::raw(z4), 2), 2u);
  EXPECT_FALSE(qsr::is_right_quasi_regular(qsr::make_cyclic(2), 1));
  EXPECT_FALSE(oracle::rqr(oracle::raw(qsr::make_cyclic(2)), 1));
}

TEST(RadicalByDefinition, Examples) {
  const auto z4 = qsr::make_cyclic(4);
  EXPECT_EQ(as_set(qsr::radical_by_definition(z4)), (oracle::Set{0, 2}));
  EXPECT_EQ(oracle::radical(oracle::raw(z4)), (oracle::Set{0, 2}));

  EXPECT_EQ(as_set(qsr::radical_by_definition(qsr::make_null(3))), (oracle::Set{0, 1, 2}));

  const auto z6 = qsr::make_cyclic(6);
  EXPECT_EQ(as_set(qsr::radical_by_definition(z6)), (oracle::Set{0}));
  EXPECT_EQ(oracle::radical(oracle::raw(z6)), (oracle::Set{0}));

  // Z_2 x Z_3 has the same radical as Z_6
  const auto p = qsr::direct_product(qsr::make_cyclic(2), qsr::make_cyclic(3));
  EXPECT_EQ(qsr::radical_by_definition(p).count(), 1u);
}

TEST(RadicalByMaximalIdeals, Examples) {
  const auto z4 = qsr::make_cyclic(4);
  EXPECT_EQ(as_set(qsr::radical_by_maximal_ideals(qsr::IdealLattice(z4))), (oracle::Set{0, 2}));

  const auto r8 = qsr::make_nonunital_ideal(2, 4);
  EXPECT_EQ(as_set(qsr::radical_by_maximal_ideals(qsr::IdealLattice(r8))),
            (oracle::Set{0, 1, 2, 3}));
  EXPECT_EQ(oracle::radical_by_maximal(oracle::raw(r8)), (oracle::Set{0, 1, 2, 3}));

  const auto z6 = qsr::make_cyclic(6);
  EXPECT_EQ(as_set(qsr::radical_by_maximal_ideals(qsr::IdealLattice(z6))), (oracle::Set{0}));
  EXPECT_EQ(oracle::radical_by_maximal(oracle::raw(z6)), (oracle::Set{0}));
}

TEST(RadicalByQuiteSuperfluous, Examples) {
  const auto z4 = qsr::make_cyclic(4);
  EXPECT_EQ(as_set(qsr::radical_by_quite_superfluous(qsr::IdealLattice(z4))), (oracle::Set{0, 2}));
  const auto r8 = qsr::make_nonunital_ideal(2, 4);
  EXPECT_EQ(qsr::radical_by_quite_superfluous(qsr::IdealLattice(r8)).count(), 4u);
  const auto z1 = qsr::make_cyclic(1);
  EXPECT_EQ(as_set(qsr::radical_by_quite_superfluous(qsr::IdealLattice(z1))), (oracle::Set{0}));
}

TEST(PrincipalCharacterisations, Examples) {
  const auto r4 = qsr::make_cyclic(4);
  const qsr::IdealLattice z4(r4);
  EXPECT_EQ(as_set(qsr::radical_by_principal_quite_superfluous(z4)), (oracle::Set{0, 2}));
  EXPECT_EQ(as_set(qsr::radical_by_principal_superfluous(z4)), (oracle::Set{0, 2}));

  const auto n3 = qsr::make_null(3);
  const qsr::IdealLattice null3(n3);
  EXPECT_EQ(as_set(qsr::radical_by_principal_quite_superfluous(null3)), (oracle::Set{0, 1, 2}));

  const auto r6 = qsr::make_cyclic(6);
  const qsr::IdealLattice z6(r6);
  EXPECT_EQ(as_set(qsr::radical_by_principal_quite_superfluous(z6)), (oracle::Set{0}));
  EXPECT_EQ(as_set(qsr::radical_by_principal_superfluous(z6)), (oracle::Set{0}));

  const auto r1 = qsr::make_cyclic(1);
  const qsr::IdealLattice z1(r1);
  EXPECT_EQ(as_set(qsr::radical_by_principal_superfluous(z1)), (oracle::Set{0}));
}

TEST(MaximalIdealAvoidingRegulator, Examples) {
  const auto z4 = qsr::make_cyclic(4);
  const qsr::IdealLattice l4(z4);
  EXPECT_EQ(as_set(qsr::maximal_ideal_avoiding_regulator(l4, qsr::zero_ideal(z4), 1).members()),
            (oracle::Set{0, 2}));

  // Both {0,2,4} and {0,3} qualify; {0,3} is smaller because it lacks 2.
  const auto z6 = qsr::make_cyclic(6);
  const qsr::IdealLattice l6(z6);
  EXPECT_EQ(as_set(qsr::maximal_ideal_avoiding_regulator(l6, qsr::zero_ideal(z6), 1).members()),
            (oracle::Set{0, 3}));

  try {
    qsr::maximal_ideal_avoiding_regulator(l4, qsr::whole_ring(z4), 1);
    FAIL();
  } catch (const qsr::Error& e) {
    EXPECT_EQ(e.code(), qsr::Errc::NotProper);
  }
  try {
    qsr::maximal_ideal_avoiding_regulator(l4, qsr::zero_ideal(z4), 2);
    FAIL();
  } catch (const qsr::Error& e) {
    EXPECT_EQ(e.code(), qsr::Errc::NotARegulator);
  }
}

TEST(MaximalIdealAvoidingRegulator, RegulatorOtherThanUnity) {
  // In Z_6, modulo {0,3} the element 4 acts as 1 (4r - r = 3r), so 4
  // regulates {0,3}; the witness must avoid 4.
  const auto z6 = qsr::make_cyclic(6);
  const qsr::IdealLattice l6(z6);
  const auto i = ideal(z6, {0, 3});
  ASSERT_TRUE(qsr::is_regulator(i, 4));
  const auto m = qsr::maximal_ideal_avoiding_regulator(l6, i, 4);
  EXPECT_EQ(as_set(m.members()), (oracle::Set{0, 3}));
}

TEST(VerifyRing, Examples) {
  const auto z4 = qsr::verify_ring(qsr::make_cyclic(4));
  EXPECT_TRUE(z4.agreement);
  EXPECT_TRUE(z4.all_pass());
  EXPECT_NE(z4.find("unital_radical_superfluous"), nullptr);

  const auto r8 = qsr::verify_ring(qsr::make_nonunital_ideal(2, 4));
  EXPECT_TRUE(r8.agreement);
  EXPECT_TRUE(r8.all_pass());
  EXPECT_TRUE(r8.by_definition.is_full());
  EXPECT_EQ(r8.find("unital_radical_superfluous"), nullptr);

  const auto null4 = qsr::verify_ring(qsr::make_null(4));
  EXPECT_TRUE(null4.all_pass());
  EXPECT_TRUE(null4.by_quite_superfluous.is_full());
}

TEST(VerifyRing, InjectedFaultIsDetected) {
  for (const auto& r : qsr::catalog()) {
    const auto report = qsr::verify_ring(r, {.inject_fault = true});
    EXPECT_FALSE(report.agreement) << r.name();
    EXPECT_FALSE(report.all_pass());
    const auto* check = report.find("five_way_agreement");
    ASSERT_NE(check, nullptr);
    EXPECT_FALSE(check->pass);
    EXPECT_TRUE(check->counterexample.contains("element"));
  }
}

TEST(VerifyRing, OrderCapPropagates) {
  try {
    qsr::verify_ring(qsr::make_cyclic(20), {.max_order = 10});
    FAIL();
  } catch (const qsr::Error& e) {
    EXPECT_EQ(e.code(), qsr::Errc::OrderCapExceeded);
  }
}

TEST(RadicalProperties, MatchesOraclesOnCatalog) {
  for (const auto& r : qsr::catalog()) {
    const auto raw = oracle::raw(r);
    const auto report = qsr::verify_ring(r);
    EXPECT_TRUE(report.all_pass()) << r.name();
    EXPECT_EQ(as_set(report.by_definition), oracle::radical(raw)) << r.name();
    if (r.order() <= 16) {
      EXPECT_EQ(as_set(report.by_maximal_ideals), oracle::radical_by_maximal(raw)) << r.name();
    }
  }
}

// Random direct products of small catalog rings: every check in the battery
// must hold on rings the catalog does not list.
TEST(RadicalProperties, RandomProducts) {
  std::vector<qsr::FiniteRing> pool;
  for (auto& r : qsr::catalog())
    if (r.order() <= 6) pool.push_back(std::move(r));
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = pool[gen() % pool.size()];
    const auto& b = pool[gen() % pool.size()];
    const auto p = qsr::direct_product(a, b, 36);
    const auto report = qsr::verify_ring(p);
    EXPECT_TRUE(report.all_pass()) << p.name();
    // J(R x S) = J(R) x J(S)
    const auto ja = qsr::radical_by_definition(a);
    const auto jb = qsr::radical_by_definition(b);
    EXPECT_EQ(report.by_definition.count(), ja.count() * jb.count()) << p.name();
  }
}
