#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sasaki {

/// Index of an element inside one FiniteOml. Meaningless across lattices.
using Element = std::uint32_t;

/// Fixed-universe bitset over the elements 0..universe-1 of one lattice.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Element e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  /// Set difference.
  ElementSet& operator-=(const ElementSet& other) noexcept;
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }

  bool operator==(const ElementSet& other) const noexcept = default;

  std::vector<Element> members() const;
  std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<Element>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order used for every enumerated family: by size, then by the
/// sorted member list lexicographically.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace sasaki
