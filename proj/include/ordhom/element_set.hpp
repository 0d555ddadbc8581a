#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ordhom {

/// Fixed-capacity bitmask over element ids of one poset.
///
/// Comparison is by numeric value of the mask (bit i has weight 2^i), which is
/// the tie-breaker used for the deterministic down-set ordering.
class ElementSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr ElementSet() = default;

  ElementSet(std::initializer_list<std::size_t> ids) {
    for (auto id : ids) set(id);
  }

  /// {0, ..., n-1}
  static ElementSet range(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  static ElementSet from_word(std::uint64_t w) {
    ElementSet s;
    s.words_[0] = w;
    return s;
  }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Index of the highest member plus one (0 for the empty set).
  std::size_t bound() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w]) return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return 0;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      auto bits = words_[w];
      while (bits) {
        auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::uint64_t word(std::size_t i) const { return words_[i]; }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  /// 0/1 characteristic string over ids 0..n-1.
  std::string to_bits(std::size_t n) const {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Orders sets by cardinality first, then by numeric value.
struct BySizeThenValue {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  }
};

}  // namespace ordhom

template <>
struct std::hash<ordhom::ElementSet> {
  std::size_t operator()(const ordhom::ElementSet& s) const noexcept { return s.hash(); }
};
