#include "qsr/ideal_lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "qsr/error.hpp"

namespace qsr {

std::vector<RightIdeal> enumerate_right_ideals(const FiniteRing& ring, std::size_t max_order) {
  if (ring.order() > max_order) {
    throw Error(Errc::OrderCapExceeded, "order " + std::to_string(ring.order()) +
                                            " exceeds lattice cap " + std::to_string(max_order));
  }
  std::vector<RightIdeal> principals;
  std::unordered_set<ElementSet, ElementSetHash> seen_principal;
  for (Element a = 0; a < ring.order(); ++a) {
    RightIdeal p = principal(ring, a);
    if (seen_principal.insert(p.members()).second) principals.push_back(std::move(p));
  }

  std::vector<RightIdeal> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<std::size_t> pending;
  auto adjoin = [&](RightIdeal ideal) {
    if (seen.insert(ideal.members()).second) {
      found.push_back(std::move(ideal));
      pending.push_back(found.size() - 1);
    }
  };
  adjoin(zero_ideal(ring));
  while (!pending.empty()) {
    const std::size_t k = pending.back();
    pending.pop_back();
    for (const RightIdeal& p : principals) {
      if (p.is_subset_of(found[k])) continue;
      adjoin(sum_ideals(found[k], p));
    }
  }

  std::sort(found.begin(), found.end(), [](const RightIdeal& a, const RightIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

IdealLattice::IdealLattice(const FiniteRing& ring, std::size_t max_order)
    : ring_(&ring), ideals_(enumerate_right_ideals(ring, max_order)) {
  const std::size_t count = ideals_.size();
  regulators_.reserve(count);
  for (const RightIdeal& ideal : ideals_) {
    auto w = is_regular(ideal);
    regulators_.push_back(w ? std::optional<Element>(w->regulator) : std::nullopt);
  }
  maximal_.assign(count, false);
  superfluous_.assign(count, false);
  quite_superfluous_.assign(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    maximal_[i] = is_maximal(ideals_[i]);
    superfluous_[i] = is_superfluous(ideals_[i]);
    quite_superfluous_[i] = is_quite_superfluous(ideals_[i]);
  }
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& members) const {
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (ideals_[i].members() == members) return i;
  }
  return std::nullopt;
}

void IdealLattice::check_ring(const RightIdeal& ideal) const {
  if (&ideal.ring() != ring_) throw Error(Errc::RingMismatch, "ideal belongs to another ring");
}

bool IdealLattice::is_maximal(const RightIdeal& ideal) const {
  check_ring(ideal);
  if (ideal.is_whole()) return false;
  for (const RightIdeal& j : ideals_) {
    if (!j.is_whole() && j.size() > ideal.size() && ideal.is_subset_of(j)) return false;
  }
  return true;
}

bool IdealLattice::is_superfluous(const RightIdeal& ideal) const {
  check_ring(ideal);
  for (const RightIdeal& i : ideals_) {
    if (!i.is_whole() && sums_to_whole(ideal, i)) return false;
  }
  return true;
}

bool IdealLattice::is_quite_superfluous(const RightIdeal& ideal) const {
  check_ring(ideal);
  for (std::size_t k = 0; k < ideals_.size(); ++k) {
    const RightIdeal& i = ideals_[k];
    // R itself may be regular; the implication then holds trivially.
    if (!regulators_[k] || i.is_whole()) continue;
    if (sums_to_whole(ideal, i)) return false;
  }
  return true;
}

std::vector<std::size_t> IdealLattice::proper_regular() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ideals_.size(); ++k) {
    if (regulators_[k] && !ideals_[k].is_whole()) out.push_back(k);
  }
  return out;
}

}  // namespace qsr
