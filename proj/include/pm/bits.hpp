#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace pm {

/// Set of dense vertex indices over a fixed universe [0, universe).
/// Single 64-bit word for universes up to 64, word array beyond that.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  template <typename It>
  static Bits from_range(int universe, It first, It last) {
    Bits b(universe);
    for (It it = first; it != last; ++it) b.set(*it);
    return b;
  }
  static Bits from_indices(int universe, const std::vector<int>& idx) {
    return from_range(universe, idx.begin(), idx.end());
  }

  int universe() const { return universe_; }

  void set(int i) {
    assert(i >= 0 && i < universe_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < universe_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    if (i < 0 || i >= universe_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    size_t m = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < m; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  /// True when `o` is a subset of *this.
  bool contains(const Bits& o) const {
    for (size_t i = 0; i < o.words_.size(); ++i) {
      uint64_t mine = i < words_.size() ? words_[i] : 0;
      if (o.words_[i] & ~mine) return false;
    }
    return true;
  }

  Bits operator|(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  Bits operator&(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  /// Set difference *this \ o.
  Bits minus(const Bits& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

  Bits& operator|=(const Bits& o) { return *this = *this | o; }
  Bits& operator&=(const Bits& o) { return *this = *this & o; }

  bool operator==(const Bits& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  /// Smallest element, or -1 when empty.
  int lowest() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        out.push_back(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        fn(int(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  /// Lexicographic order on the ascending index sequences, shorter prefix first.
  /// {0,5} < {1,2} and {1} < {1,2}.
  static bool lex_less(const Bits& a, const Bits& b) {
    size_t m = std::max(a.words_.size(), b.words_.size());
    for (size_t i = 0; i < m; ++i) {
      uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
      uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
      uint64_t diff = wa ^ wb;
      if (!diff) continue;
      uint64_t low = diff & ~(diff - 1);
      // The smallest differing element: whoever has it is either a strict
      // prefix-extension loser or has the smaller element at that slot.
      // Whoever owns the smallest differing element e wins, unless the other
      // set is a strict prefix (ends before e), in which case the prefix wins.
      if (wa & low) return !ends_before(b, i, low);
      return ends_before(a, i, low);
    }
    return false;
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(universe_);
    for (uint64_t w : words_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

 private:
  template <typename Op>
  Bits apply(const Bits& o, Op op) const {
    assert(universe_ == o.universe_);
    Bits r(universe_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], uint64_t(i < o.words_.size() ? o.words_[i] : 0));
    return r;
  }

  // True when `p` has no element at or above the bit `low` of word `wi`.
  static bool ends_before(const Bits& p, size_t wi, uint64_t low) {
    uint64_t wp = wi < p.words_.size() ? p.words_[wi] : 0;
    if (wp & ~(low - 1)) return false;
    for (size_t j = wi + 1; j < p.words_.size(); ++j)
      if (p.words_[j]) return false;
    return true;
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace pm
