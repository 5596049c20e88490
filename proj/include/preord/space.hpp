#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preord/relation.hpp"
#include "preord/topology.hpp"

namespace preord {

enum class Dir { inc, dec };

// A finite topological preordered space: topology plus a reflexive
// transitive relation on the same ground set. Immutable after construction;
// all operations are pure, so instances can be shared across workers freely.
// The t1/t2 flags are monotone caches filled in by the property checkers.
class PreorderedSpace {
public:
  PreorderedSpace(FiniteTopology top, Relation ord) : top_(std::move(top)), ord_(std::move(ord)) {
    require(top_.size() == ord_.size(), Err::SizeMismatch, "topology and order sizes differ");
    require(ord_.is_reflexive(), Err::BadArguments, "order must be reflexive");
    require(ord_.is_transitive(), Err::BadArguments, "order must be transitive");
    dual_ = ord_.transposed();
  }

  int size() const { return top_.size(); }
  const FiniteTopology& topology() const { return top_; }
  const Relation& order() const { return ord_; }
  const Relation& order_dual() const { return dual_; }
  bool leq(int x, int y) const { return ord_.at(x, y); }

  // Cached tri-state flags (-1 unknown / 0 false / 1 true).
  int t1_flag() const { return t1_.load(std::memory_order_relaxed); }
  int t2_flag() const { return t2_.load(std::memory_order_relaxed); }
  void set_t1_flag(bool v) const { t1_.store(v ? 1 : 0, std::memory_order_relaxed); }
  void set_t2_flag(bool v) const { t2_.store(v ? 1 : 0, std::memory_order_relaxed); }

  void check(const Bits& s) const { top_.check(s); }

private:
  FiniteTopology top_;
  Relation ord_;
  Relation dual_;
  mutable std::atomic<int> t1_{-1}, t2_{-1};
};

// Builds a space from a minimal-open table and order generator pairs; the
// order is the reflexive-transitive closure of the generators.
PreorderedSpace make_space(std::vector<Bits> minopen, const std::vector<std::pair<int, int>>& generators);

Bits closure(const PreorderedSpace& s, const Bits& set);
Bits interior(const PreorderedSpace& s, const Bits& set);

// Increasing hull i(S) / decreasing hull d(S).
Bits hull(const PreorderedSpace& s, const Bits& set, Dir dir);

// Smallest closed monotone superset I(S) / D(S) (alternating hull and
// closure to a fixpoint; at most n rounds on a finite space).
Bits closed_hull(const PreorderedSpace& s, const Bits& set, Dir dir);

// d(S) /\ i(S); the smallest convex superset.
Bits convex_hull(const PreorderedSpace& s, const Bits& set);

bool is_convex_set(const PreorderedSpace& s, const Bits& set);
bool is_c_set(const PreorderedSpace& s, const Bits& set);

// Closure of a relation in the product topology, where the minimal open of
// (x,y) is minopen(x) x minopen(y). Row x comes out as cl(U_{x' in M(x)} R(x')).
Relation product_closure(const FiniteTopology& top, const Relation& r);
inline Relation product_closure(const PreorderedSpace& s, const Relation& r) {
  require(r.size() == s.size(), Err::SizeMismatch, "relation size differs from space");
  return product_closure(s.topology(), r);
}

// Smallest open monotone superset (monotone opens are closed under both
// union and intersection on a finite space, so the minimum exists).
Bits open_monotone_hull(const PreorderedSpace& s, const Bits& set, Dir dir);

// Smallest open convex superset.
Bits open_convex_hull(const PreorderedSpace& s, const Bits& set);

// All open monotone sets of the given direction, enumerated as unions of the
// per-point generators. Throws InstanceTooLarge past the cap.
std::vector<Bits> open_monotone_sets(const PreorderedSpace& s, Dir dir, size_t cap = (1u << 20));

// Plain topological normality (disjoint closed sets separated by disjoint
// opens), decided exactly via point-closure generators.
bool topologically_normal(const PreorderedSpace& s);

}  // namespace preord
