#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsr/element_set.hpp"

namespace qsr {

/// Square operation table, row-major by left operand: table[a][b] = a op b.
using Table = std::vector<std::vector<Element>>;

/// Largest order accepted by validate_ring.
inline constexpr std::size_t kValidationOrderCap = 4096;

/// An associative ring, not necessarily unital, stored as full Cayley tables.
///
/// Instances can only be obtained through validate_ring (or the builders in
/// constructions.hpp, which go through it), so every FiniteRing satisfies the
/// ring axioms with index 0 as the additive identity. Values are immutable.
class FiniteRing {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  /// Two-sided multiplicative identity, detected at construction.
  std::optional<Element> unity() const noexcept { return unity_; }
  bool is_unital() const noexcept { return unity_.has_value(); }

  /// Optional display labels, one per element (empty when absent).
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element a) const;

  Table add_table() const;
  Table mul_table() const;

  ElementSet all_elements() const { return ElementSet::full(order_); }

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  friend FiniteRing validate_ring(std::size_t order, const Table& add, const Table& mul,
                                  std::string name, std::vector<std::string> labels);

  FiniteRing() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::optional<Element> unity_;
  std::vector<std::string> labels_;
};

/// Checks the ring axioms exhaustively and builds a FiniteRing.
///
/// Checks run in this order, each reporting the first violating triple in
/// lexicographic (a, b, c) order: table shape and entry range, additive
/// abelian group with identity at index 0, both distributive laws,
/// associativity of multiplication. Throws qsr::Error with BadTableShape,
/// NotAbelianGroup, NotDistributive, NotAssociative or OrderCapExceeded.
FiniteRing validate_ring(std::size_t order, const Table& add, const Table& mul,
                         std::string name, std::vector<std::string> labels = {});

}  // namespace qsr
