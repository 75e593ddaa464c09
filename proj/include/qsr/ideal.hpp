#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qsr/element_set.hpp"
#include "qsr/finite_ring.hpp"

namespace qsr {

/// A right ideal of a finite ring: an additive subgroup I with I*R contained
/// in I. Two right ideals of the same ring are equal iff their member sets are.
///
/// Holds a non-owning pointer to its ring; the ring must outlive the ideal.
class RightIdeal {
 public:
  const FiniteRing& ring() const noexcept { return *ring_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(Element a) const noexcept { return members_.contains(a); }
  bool is_whole() const noexcept { return members_.is_full(); }
  bool is_subset_of(const RightIdeal& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  /// Wraps a member set after checking the right-ideal axioms. Returns
  /// nothing when the set is not a right ideal of `ring`.
  static std::optional<RightIdeal> from_members(const FiniteRing& ring, ElementSet members);

  friend bool operator==(const RightIdeal& a, const RightIdeal& b) noexcept {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  friend RightIdeal right_closure(const FiniteRing&, std::span<const Element>);
  friend RightIdeal sum_ideals(const RightIdeal&, const RightIdeal&);
  friend RightIdeal whole_ring(const FiniteRing&);

  RightIdeal(const FiniteRing& ring, ElementSet members)
      : ring_(&ring), members_(std::move(members)) {}

  const FiniteRing* ring_;
  ElementSet members_;
};

/// Certificate that `ideal` is regular: regulator * r - r lies in the ideal
/// for every ring element r.
struct RegulatorWitness {
  RightIdeal ideal;
  Element regulator;
};

/// True iff `s` contains 0 and is closed under addition, negation and
/// multiplication on the right by every ring element.
bool is_right_ideal(const FiniteRing& ring, const ElementSet& s);

/// Smallest right ideal containing `seed`.
RightIdeal right_closure(const FiniteRing& ring, std::span<const Element> seed);

/// Smallest right ideal containing `a`: the additive span of Z*a and a*R.
RightIdeal principal(const FiniteRing& ring, Element a);

RightIdeal zero_ideal(const FiniteRing& ring);
RightIdeal whole_ring(const FiniteRing& ring);

/// I + J. Throws RingMismatch when the ideals live in different rings.
RightIdeal sum_ideals(const RightIdeal& i, const RightIdeal& j);

/// Whether I + J is the whole ring, decided by counting:
/// |I + J| = |I| |J| / |I intersect J|.
bool sums_to_whole(const RightIdeal& i, const RightIdeal& j);

/// Whether `e` satisfies e*r - r in I for all r.
bool is_regulator(const RightIdeal& ideal, Element e);

/// Regulator with the smallest element index, if any.
std::optional<RegulatorWitness> is_regular(const RightIdeal& ideal);

}  // namespace qsr
