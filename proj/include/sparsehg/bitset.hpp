#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sparsehg {

/// Fixed-capacity bitset over vertex ids [0, n). Edges keep one of these
/// next to their sorted id array; set operations reduce to word ops.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }

  void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { for (auto& w : words_) w = 0; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_) if (w != 0) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  int union_count(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] | o.words_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// True when every set bit of this is also set in o.
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  static Bitset from(int capacity, const std::vector<int>& ids) {
    Bitset b(capacity);
    for (int i : ids) b.set(i);
    return b;
  }

 private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sparsehg
