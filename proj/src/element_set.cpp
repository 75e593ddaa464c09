#include "qsr/element_set.hpp"

#include <bit>

namespace qsr {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
  return s;
}

ElementSet ElementSet::from_members(std::size_t universe, const std::vector<Element>& members) {
  ElementSet s(universe);
  for (Element e : members) s.insert(e);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const std::uint64_t lowest = diff & (~diff + 1);
    // The set lacking the first differing element is the smaller one.
    return (a.words_[w] & lowest) != 0 ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace qsr
