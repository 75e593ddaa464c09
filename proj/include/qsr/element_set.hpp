#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qsr {

/// Index of an element in a finite ring's Cayley tables. Index 0 is always
/// the additive identity.
using Element = std::uint32_t;

/// Fixed-universe bitset over element indices [0, universe).
///
/// Ordering is lexicographic on the bit string read from index 0 upwards,
/// with an absent bit sorting before a present one. This is the order used
/// whenever a deterministic "smallest" ideal has to be picked.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  static ElementSet from_members(std::size_t universe, const std::vector<Element>& members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  bool contains(Element e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  void toggle(Element e) noexcept { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }

  bool is_subset_of(const ElementSet& other) const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  /// Members in ascending index order.
  std::vector<Element> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace qsr
