#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsr/ideal.hpp"

namespace qsr {

/// Default order cap for full right-ideal lattice enumeration.
inline constexpr std::size_t kLatticeOrderCap = 64;

/// All right ideals of R, generated as the join-closure of the principal
/// right ideals together with {0}. Every right ideal is the sum of the
/// principal ideals of its members, so nothing is missed.
///
/// Result is sorted by size, then by ElementSet order. Throws
/// OrderCapExceeded when R.order() > max_order.
std::vector<RightIdeal> enumerate_right_ideals(const FiniteRing& ring,
                                               std::size_t max_order = kLatticeOrderCap);

/// The enumerated right-ideal lattice of one ring, with every classification
/// computed up front. Read-only after construction and safe to share.
class IdealLattice {
 public:
  explicit IdealLattice(const FiniteRing& ring, std::size_t max_order = kLatticeOrderCap);
  IdealLattice(FiniteRing&&, std::size_t = kLatticeOrderCap) = delete;

  const FiniteRing& ring() const noexcept { return *ring_; }
  const std::vector<RightIdeal>& ideals() const noexcept { return ideals_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const RightIdeal& operator[](std::size_t i) const { return ideals_[i]; }

  std::optional<std::size_t> index_of(const ElementSet& members) const;

  /// Smallest-index regulator of ideal i, if it is regular.
  std::optional<Element> regulator(std::size_t i) const { return regulators_[i]; }

  bool is_maximal(std::size_t i) const { return maximal_[i]; }
  bool is_superfluous(std::size_t i) const { return superfluous_[i]; }
  bool is_quite_superfluous(std::size_t i) const { return quite_superfluous_[i]; }

  // Predicates on arbitrary right ideals of the same ring, decided against
  // the enumerated lattice.
  bool is_maximal(const RightIdeal& ideal) const;
  bool is_superfluous(const RightIdeal& ideal) const;
  bool is_quite_superfluous(const RightIdeal& ideal) const;

  /// Indices of the regular right ideals other than R itself.
  std::vector<std::size_t> proper_regular() const;

 private:
  void check_ring(const RightIdeal& ideal) const;

  const FiniteRing* ring_;
  std::vector<RightIdeal> ideals_;
  std::vector<std::optional<Element>> regulators_;
  std::vector<bool> maximal_;
  std::vector<bool> superfluous_;
  std::vector<bool> quite_superfluous_;
};

}  // namespace qsr
