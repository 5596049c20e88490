#pragma once

#include <vector>

#include "preord/bits.hpp"
#include "preord/error.hpp"

namespace preord {

// A finite topology given by its minimal-open-neighborhood table: minopen(x)
// is the smallest open set containing x. Every finite topology arises this
// way, opens being exactly the unions of minimal opens.
class FiniteTopology {
public:
  FiniteTopology() = default;
  explicit FiniteTopology(std::vector<Bits> minopen) : minopen_(std::move(minopen)) {
    n_ = int(minopen_.size());
    validate();
  }

  static FiniteTopology discrete(int n) {
    std::vector<Bits> m;
    m.reserve(n);
    for (int i = 0; i < n; ++i) m.push_back(Bits::single(n, i));
    return FiniteTopology(std::move(m));
  }
  static FiniteTopology indiscrete(int n) {
    std::vector<Bits> m(n, Bits::full(n));
    return FiniteTopology(std::move(m));
  }

  int size() const { return n_; }
  const Bits& minopen(int x) const { return minopen_[x]; }
  const std::vector<Bits>& minopen_table() const { return minopen_; }

  bool is_open(const Bits& s) const {
    check(s);
    for (int x = s.first(); x >= 0; x = s.next(x))
      if (!minopen_[x].is_subset_of(s)) return false;
    return true;
  }
  bool is_closed(const Bits& s) const { return is_open(s.complement()); }

  // cl(S) = { x : minopen(x) meets S }.
  Bits closure(const Bits& s) const {
    check(s);
    Bits r(n_);
    for (int x = 0; x < n_; ++x)
      if (minopen_[x].intersects(s)) r.set(x);
    return r;
  }
  Bits interior(const Bits& s) const { return closure(s.complement()).complement(); }

  // Smallest open superset (union of the minimal opens of members).
  Bits open_hull(const Bits& s) const {
    check(s);
    Bits r(n_);
    for (int x = s.first(); x >= 0; x = s.next(x)) r |= minopen_[x];
    return r;
  }

  bool is_discrete() const {
    for (int x = 0; x < n_; ++x)
      if (minopen_[x].count() != 1) return false;
    return true;
  }

  bool operator==(const FiniteTopology& o) const { return minopen_ == o.minopen_; }
  bool operator!=(const FiniteTopology& o) const { return !(*this == o); }

  void check(const Bits& s) const {
    require(s.size() == n_, Err::SizeMismatch,
            "subset over " + std::to_string(s.size()) + " points, space has " + std::to_string(n_));
  }

private:
  void validate() const {
    for (int x = 0; x < n_; ++x) {
      require(minopen_[x].size() == n_, Err::SizeMismatch, "minimal-open row width mismatch");
      require(minopen_[x].test(x), Err::InvalidTopology,
              "point " + std::to_string(x) + " missing from its minimal open set");
      for (int y = minopen_[x].first(); y >= 0; y = minopen_[x].next(y))
        require(minopen_[y].is_subset_of(minopen_[x]), Err::InvalidTopology,
                "minimal opens of " + std::to_string(x) + " and " + std::to_string(y) +
                    " violate the base property");
    }
  }

  int n_ = 0;
  std::vector<Bits> minopen_;
};

}  // namespace preord
