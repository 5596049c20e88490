#include "preord/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace preord {

PreorderedSpace make_space(std::vector<Bits> minopen, const std::vector<std::pair<int, int>>& generators) {
  FiniteTopology top(std::move(minopen));
  Relation gen = Relation::from_pairs(top.size(), generators);
  Relation ord = gen.reflexive_closure().transitive_closure();
  return PreorderedSpace(std::move(top), std::move(ord));
}

Bits closure(const PreorderedSpace& s, const Bits& set) { return s.topology().closure(set); }
Bits interior(const PreorderedSpace& s, const Bits& set) { return s.topology().interior(set); }

Bits hull(const PreorderedSpace& s, const Bits& set, Dir dir) {
  s.check(set);
  return dir == Dir::inc ? s.order().image(set) : s.order_dual().image(set);
}

Bits closed_hull(const PreorderedSpace& s, const Bits& set, Dir dir) {
  s.check(set);
  Bits cur = set;
  while (true) {
    Bits next = s.topology().closure(hull(s, cur, dir));
    if (next == cur) return cur;
    cur = next;
  }
}

Bits convex_hull(const PreorderedSpace& s, const Bits& set) {
  return hull(s, set, Dir::dec) & hull(s, set, Dir::inc);
}

bool is_convex_set(const PreorderedSpace& s, const Bits& set) { return convex_hull(s, set) == set; }

bool is_c_set(const PreorderedSpace& s, const Bits& set) {
  return (closed_hull(s, set, Dir::dec) & closed_hull(s, set, Dir::inc)) == set;
}

Relation product_closure(const FiniteTopology& top, const Relation& r) {
  require(top.size() == r.size(), Err::SizeMismatch, "relation size differs from topology");
  int n = top.size();
  Relation out(n);
  for (int x = 0; x < n; ++x) {
    Bits u(n);
    for (int xp = top.minopen(x).first(); xp >= 0; xp = top.minopen(x).next(xp)) u |= r.row(xp);
    out.row(x) = top.closure(u);
  }
  return out;
}

Bits open_monotone_hull(const PreorderedSpace& s, const Bits& set, Dir dir) {
  s.check(set);
  Bits cur = set;
  while (true) {
    Bits next = s.topology().open_hull(hull(s, cur, dir));
    if (next == cur) return cur;
    cur = next;
  }
}

Bits open_convex_hull(const PreorderedSpace& s, const Bits& set) {
  s.check(set);
  Bits cur = set;
  while (true) {
    Bits next = convex_hull(s, s.topology().open_hull(cur));
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Bits> open_monotone_sets(const PreorderedSpace& s, Dir dir, size_t cap) {
  int n = s.size();
  std::vector<Bits> gens;
  gens.reserve(n);
  for (int x = 0; x < n; ++x) gens.push_back(open_monotone_hull(s, Bits::single(n, x), dir));

  // All unions of generators, deduplicated breadth-first.
  auto bits_hash = [](const Bits& b) { return b.hash(); };
  std::unordered_set<Bits, decltype(bits_hash)> seen(64, bits_hash);
  std::vector<Bits> out{Bits(n)};
  seen.insert(out[0]);
  for (size_t i = 0; i < out.size(); ++i) {
    Bits base = out[i];
    for (const Bits& g : gens) {
      if (g.is_subset_of(base)) continue;
      Bits u = base | g;
      if (seen.insert(u).second) {
        out.push_back(u);
        require(out.size() <= cap, Err::InstanceTooLarge,
                "more than " + std::to_string(cap) + " open monotone sets");
      }
    }
  }
  return out;
}

bool topologically_normal(const PreorderedSpace& s) {
  // Disjoint closed sets decompose into point closures, and smallest open
  // supersets distribute over unions, so it is enough to separate pairs of
  // point closures.
  int n = s.size();
  const auto& top = s.topology();
  std::vector<Bits> pc(n), oh(n);
  for (int x = 0; x < n; ++x) {
    pc[x] = top.closure(Bits::single(n, x));
    oh[x] = top.open_hull(pc[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!pc[x].intersects(pc[y]) && oh[x].intersects(oh[y])) return false;
  return true;
}

}  // namespace preord
