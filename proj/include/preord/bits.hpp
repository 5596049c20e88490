#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace preord {

// Fixed-width bitset sized at construction. Rows of relations, subsets of
// ground sets and grid frontiers all use this; binary operations require
// equal widths (callers check and raise SizeMismatch at API boundaries).
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits full(int n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }
  static Bits single(int n, int i) {
    Bits b(n);
    b.set(i);
    return b;
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {  // set difference
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a.subtract(b); }

  Bits complement() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool is_subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Lowest set index, or -1.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  // Next set index strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = w_[k] & (~0ull << (i & 63));
    while (true) {
      if (w) return int(k * 64 + std::countr_zero(w));
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }
  template <class F>
  void for_each(F f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  // Word-level shifts used by the grid frontier kernels.
  Bits shifted_up(int k) const {  // index i -> i + k
    Bits r(n_);
    if (k >= n_) return r;
    int wk = k >> 6, bk = k & 63;
    for (int i = int(w_.size()) - 1; i >= wk; --i) {
      uint64_t v = w_[i - wk] << bk;
      if (bk && i - wk - 1 >= 0) v |= w_[i - wk - 1] >> (64 - bk);
      r.w_[i] = v;
    }
    r.trim();
    return r;
  }
  Bits shifted_down(int k) const {  // index i -> i - k
    Bits r(n_);
    if (k >= n_) return r;
    int wk = k >> 6, bk = k & 63;
    for (size_t i = 0; i + wk < w_.size(); ++i) {
      uint64_t v = w_[i + wk] >> bk;
      if (bk && i + wk + 1 < w_.size()) v |= w_[i + wk + 1] << (64 - bk);
      r.w_[i] = v;
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "{";
    for (int i = first(); i >= 0; i = next(i)) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i);
    }
    return s + "}";
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return size_t(h);
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace preord
