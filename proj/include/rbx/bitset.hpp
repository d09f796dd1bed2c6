#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace rbx {

// Fixed-universe dynamic bitset. Covers both vertex sets (hosts up to 2^20
// vertices) and edge-id sets. Kept deliberately small: just the operations the
// search code needs, all branch-light.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe, bool fill = false)
      : n_(universe), w_((universe + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void clear() { std::fill(w_.begin(), w_.end(), 0ull); }
  void fill() {
    std::fill(w_.begin(), w_.end(), ~0ull);
    trim();
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  int intersect_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First set bit at index >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    size_t wi = static_cast<size_t>(from) >> 6;
    uint64_t w = w_[wi] & (~0ull << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + __builtin_ctzll(w));
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }  // same universe only

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void trim() {
    if (n_ & 63) {
      if (!w_.empty()) w_.back() &= (~0ull >> (64 - (n_ & 63)));
    }
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace rbx
