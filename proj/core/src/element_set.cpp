#include "sasaki/element_set.hpp"

#include <algorithm>
#include <bit>

namespace sasaki {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : ElementSet(universe) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](Element e) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  });
  s += '}';
  return s;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint64_t w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ULL;
  }
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace sasaki
