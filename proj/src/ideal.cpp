#include "qsr/ideal.hpp"

#include "qsr/error.hpp"

namespace qsr {

bool is_right_ideal(const FiniteRing& ring, const ElementSet& s) {
  if (s.universe() != ring.order() || !s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Element a) {
    if (!ok) return;
    if (!s.contains(ring.neg(a))) {
      ok = false;
      return;
    }
    for (Element r = 0; r < ring.order() && ok; ++r) ok = s.contains(ring.mul(a, r));
    s.for_each([&](Element b) { ok = ok && s.contains(ring.add(a, b)); });
  });
  return ok;
}

std::optional<RightIdeal> RightIdeal::from_members(const FiniteRing& ring, ElementSet members) {
  if (!is_right_ideal(ring, members)) return std::nullopt;
  return RightIdeal(ring, std::move(members));
}

RightIdeal right_closure(const FiniteRing& ring, std::span<const Element> seed) {
  const std::size_t n = ring.order();
  ElementSet set(n);
  std::vector<Element> members;
  std::vector<Element> pending;
  auto adjoin = [&](Element x) {
    if (!set.contains(x)) {
      set.insert(x);
      pending.push_back(x);
    }
  };
  adjoin(0);
  for (Element a : seed) adjoin(a);

  // Every new element x is combined with all members seen so far and with
  // every right multiplier; the loop ends once no new element appears.
  while (!pending.empty()) {
    const Element x = pending.back();
    pending.pop_back();
    members.push_back(x);
    adjoin(ring.neg(x));
    for (Element r = 0; r < n; ++r) adjoin(ring.mul(x, r));
    for (std::size_t k = 0; k < members.size(); ++k) adjoin(ring.add(x, members[k]));
  }
  return RightIdeal(ring, std::move(set));
}

RightIdeal principal(const FiniteRing& ring, Element a) {
  const Element seed[] = {a};
  return right_closure(ring, seed);
}

RightIdeal zero_ideal(const FiniteRing& ring) { return right_closure(ring, {}); }

RightIdeal whole_ring(const FiniteRing& ring) { return RightIdeal(ring, ring.all_elements()); }

RightIdeal sum_ideals(const RightIdeal& i, const RightIdeal& j) {
  if (&i.ring() != &j.ring()) throw Error(Errc::RingMismatch, "ideals belong to different rings");
  const FiniteRing& ring = i.ring();
  ElementSet sum(ring.order());
  i.members().for_each([&](Element a) {
    j.members().for_each([&](Element b) { sum.insert(ring.add(a, b)); });
  });
  return RightIdeal(ring, std::move(sum));
}

bool sums_to_whole(const RightIdeal& i, const RightIdeal& j) {
  if (&i.ring() != &j.ring()) throw Error(Errc::RingMismatch, "ideals belong to different rings");
  const std::size_t meet = (i.members() & j.members()).count();
  return i.size() * j.size() == i.ring().order() * meet;
}

bool is_regulator(const RightIdeal& ideal, Element e) {
  const FiniteRing& ring = ideal.ring();
  if (e >= ring.order()) return false;
  for (Element r = 0; r < ring.order(); ++r) {
    if (!ideal.contains(ring.sub(ring.mul(e, r), r))) return false;
  }
  return true;
}

std::optional<RegulatorWitness> is_regular(const RightIdeal& ideal) {
  for (Element e = 0; e < ideal.ring().order(); ++e) {
    if (is_regulator(ideal, e)) return RegulatorWitness{ideal, e};
  }
  return std::nullopt;
}

}  // namespace qsr
