#pragma once

#include <utility>
#include <vector>

#include "preord/bits.hpp"
#include "preord/error.hpp"

namespace preord {

// Binary relation on {0..n-1} as row bitsets: row(x) = { y : (x,y) in R }.
class Relation {
public:
  Relation() = default;
  explicit Relation(int n) : n_(n), rows_(n, Bits(n)) {}
  explicit Relation(std::vector<Bits> rows) : n_(int(rows.size())), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      require(r.size() == n_, Err::SizeMismatch, "relation row width mismatch");
  }

  static Relation identity(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.rows_[i].set(i);
    return r;
  }
  static Relation total(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.rows_[i] = Bits::full(n);
    return r;
  }
  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) {
      require(a >= 0 && a < n && b >= 0 && b < n, Err::PointOutOfRange, "pair outside ground set");
      r.rows_[a].set(b);
    }
    return r;
  }

  int size() const { return n_; }
  const Bits& row(int x) const { return rows_[x]; }
  Bits& row(int x) { return rows_[x]; }
  bool at(int x, int y) const { return rows_[x].test(y); }
  void add(int x, int y) { rows_[x].set(y); }

  bool operator==(const Relation& o) const { return rows_ == o.rows_; }
  bool operator!=(const Relation& o) const { return !(*this == o); }

  bool contains(const Relation& o) const {
    for (int x = 0; x < n_; ++x)
      if (!o.rows_[x].is_subset_of(rows_[x])) return false;
    return true;
  }

  Relation transposed() const {
    Relation t(n_);
    for (int x = 0; x < n_; ++x)
      for (int y = rows_[x].first(); y >= 0; y = rows_[x].next(y)) t.rows_[y].set(x);
    return t;
  }

  Relation united(const Relation& o) const {
    Relation r = *this;
    for (int x = 0; x < n_; ++x) r.rows_[x] |= o.rows_[x];
    return r;
  }
  Relation intersected(const Relation& o) const {
    Relation r = *this;
    for (int x = 0; x < n_; ++x) r.rows_[x] &= o.rows_[x];
    return r;
  }

  // Image R(S) and preimage R^{-1}(S).
  Bits image(const Bits& s) const {
    Bits r(n_);
    for (int x = s.first(); x >= 0; x = s.next(x)) r |= rows_[x];
    return r;
  }
  Bits preimage(const Bits& s) const {
    Bits r(n_);
    for (int x = 0; x < n_; ++x)
      if (rows_[x].intersects(s)) r.set(x);
    return r;
  }

  bool is_reflexive() const {
    for (int x = 0; x < n_; ++x)
      if (!rows_[x].test(x)) return false;
    return true;
  }
  bool is_transitive() const {
    for (int x = 0; x < n_; ++x)
      for (int y = rows_[x].first(); y >= 0; y = rows_[x].next(y))
        if (!rows_[y].is_subset_of(rows_[x])) return false;
    return true;
  }
  bool is_antisymmetric() const {
    for (int x = 0; x < n_; ++x)
      for (int y = rows_[x].first(); y >= 0; y = rows_[x].next(y))
        if (y != x && rows_[y].test(x)) return false;
    return true;
  }
  bool is_preorder() const { return is_reflexive() && is_transitive(); }

  Relation reflexive_closure() const {
    Relation r = *this;
    for (int x = 0; x < n_; ++x) r.rows_[x].set(x);
    return r;
  }

  // Row-wise OR propagation on a worklist; no path bookkeeping.
  Relation transitive_closure() const {
    Relation r = *this;
    std::vector<int> work;
    work.reserve(n_);
    for (int x = 0; x < n_; ++x) work.push_back(x);
    std::vector<char> queued(n_, 1);
    Relation pred = r.transposed();
    while (!work.empty()) {
      int y = work.back();
      work.pop_back();
      queued[y] = 0;
      for (int x = pred.rows_[y].first(); x >= 0; x = pred.rows_[y].next(x)) {
        if (x == y) continue;
        Bits before = r.rows_[x];
        r.rows_[x] |= r.rows_[y];
        if (r.rows_[x] != before) {
          for (int z = r.rows_[x].first(); z >= 0; z = r.rows_[x].next(z))
            if (!before.test(z)) pred.rows_[z].set(x);
          if (!queued[x]) {
            queued[x] = 1;
            work.push_back(x);
          }
        }
      }
    }
    return r;
  }

  // First pair of o \ *this in row-major order, or {-1,-1}.
  std::pair<int, int> first_extra_pair_of(const Relation& o) const {
    for (int x = 0; x < n_; ++x) {
      Bits extra = o.rows_[x] - rows_[x];
      if (extra.any()) return {x, extra.first()};
    }
    return {-1, -1};
  }

private:
  int n_ = 0;
  std::vector<Bits> rows_;
};

}  // namespace preord
