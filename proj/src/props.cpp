#include "preord/props.hpp"

#include <algorithm>

namespace preord {

PropertyReport is_T1_preordered(const PreorderedSpace& s) {
  int n = s.size();
  for (int x = 0; x < n; ++x) {
    Bits ix = hull(s, Bits::single(n, x), Dir::inc);
    if (!s.topology().is_closed(ix)) {
      s.set_t1_flag(false);
      return PropertyReport::fail("T1-preordered", {{x}, {ix}, "i(x) not closed"});
    }
    Bits dx = hull(s, Bits::single(n, x), Dir::dec);
    if (!s.topology().is_closed(dx)) {
      s.set_t1_flag(false);
      return PropertyReport::fail("T1-preordered", {{x}, {dx}, "d(x) not closed"});
    }
  }
  s.set_t1_flag(true);
  return PropertyReport::pass("T1-preordered");
}

PropertyReport is_T2_preordered(const PreorderedSpace& s) {
  Relation pc = product_closure(s, s.order());
  auto [x, y] = s.order().first_extra_pair_of(pc);
  if (x >= 0) {
    s.set_t2_flag(false);
    return PropertyReport::fail("T2-preordered", {{x, y}, {}, "pair in cl(G) \\ G"});
  }
  s.set_t2_flag(true);
  return PropertyReport::pass("T2-preordered");
}

namespace {

// Smallest open monotone supersets distribute over unions, so they can be
// assembled from per-point generators. Disjoint A (closed decreasing) and B
// (closed increasing) admit disjoint open monotone separators iff the
// smallest open decreasing superset of A misses the smallest open increasing
// superset of B: any separator pair squeezes those two minima, and the
// minima themselves are separators.
struct SeparationOracle {
  std::vector<Bits> od_pt, oi_pt;

  explicit SeparationOracle(const PreorderedSpace& s) {
    int n = s.size();
    od_pt.reserve(n);
    oi_pt.reserve(n);
    for (int x = 0; x < n; ++x) {
      od_pt.push_back(open_monotone_hull(s, Bits::single(n, x), Dir::dec));
      oi_pt.push_back(open_monotone_hull(s, Bits::single(n, x), Dir::inc));
    }
  }

  Bits od(const Bits& set) const {
    Bits r(int(od_pt.size()));
    for (int x = set.first(); x >= 0; x = set.next(x)) r |= od_pt[x];
    return r;
  }
  Bits oi(const Bits& set) const {
    Bits r(int(oi_pt.size()));
    for (int x = set.first(); x >= 0; x = set.next(x)) r |= oi_pt[x];
    return r;
  }
  bool separable(const Bits& a, const Bits& b) const { return !od(a).intersects(oi(b)); }
};

PropertyReport normality_like(const PreorderedSpace& s, size_t cap, bool restrict_to_points,
                              const std::string& name) {
  PropertyReport t1 = is_T1_preordered(s);
  if (!t1.verdict) {
    Witness w = *t1.witness;
    w.note = "not T1-preordered: " + w.note;
    return PropertyReport::fail(name, std::move(w));
  }
  int n = s.size();
  SeparationOracle sep(s);
  // Closed decreasing sets are complements of open increasing ones.
  std::vector<Bits> closed_dec, closed_inc;
  for (const Bits& o : open_monotone_sets(s, Dir::inc, cap)) closed_dec.push_back(o.complement());
  for (const Bits& o : open_monotone_sets(s, Dir::dec, cap)) closed_inc.push_back(o.complement());
  auto canonical = [](std::vector<Bits>& v) {
    std::sort(v.begin(), v.end(), [](const Bits& a, const Bits& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      int i = a.first(), j = b.first();
      while (i >= 0 && j >= 0 && i == j) {
        i = a.next(i);
        j = b.next(j);
      }
      return i >= 0 && j >= 0 && i < j;
    });
  };
  canonical(closed_dec);
  canonical(closed_inc);

  std::vector<Bits> point_dec, point_inc;
  if (restrict_to_points) {
    for (int x = 0; x < n; ++x) {
      point_dec.push_back(hull(s, Bits::single(n, x), Dir::dec));
      point_inc.push_back(hull(s, Bits::single(n, x), Dir::inc));
    }
  }

  const std::vector<Bits>& as_dec = restrict_to_points ? point_dec : closed_dec;
  for (const Bits& a : as_dec)
    for (const Bits& b : closed_inc)
      if (!a.intersects(b) && !sep.separable(a, b))
        return PropertyReport::fail(name, {{}, {a, b}, "inseparable closed monotone pair"});
  if (restrict_to_points)
    for (const Bits& a : closed_dec)
      for (const Bits& b : point_inc)
        if (!a.intersects(b) && !sep.separable(a, b))
          return PropertyReport::fail(name, {{}, {a, b}, "inseparable closed monotone pair"});
  return PropertyReport::pass(name);
}

}  // namespace

PropertyReport is_normally_preordered(const PreorderedSpace& s, size_t cap) {
  return normality_like(s, cap, false, "normally-preordered");
}

PropertyReport is_regularly_preordered(const PreorderedSpace& s, size_t cap) {
  return normality_like(s, cap, true, "regularly-preordered");
}

bool convexity_at_in_nbhd(const PreorderedSpace& s, int x, const Bits& nbhd, ConvKind kind) {
  int n = s.size();
  require(x >= 0 && x < n, Err::PointOutOfRange, "point " + std::to_string(x));
  s.check(nbhd);
  Bits pt = Bits::single(n, x);
  switch (kind) {
    case ConvKind::convex: {
      // Any open decreasing U containing x contains the smallest one, so the
      // pair of smallest open monotone supersets of {x} decides.
      Bits u = open_monotone_hull(s, pt, Dir::dec);
      Bits v = open_monotone_hull(s, pt, Dir::inc);
      return (u & v).is_subset_of(nbhd);
    }
    case ConvKind::weak:
      return open_convex_hull(s, pt).is_subset_of(nbhd);
    case ConvKind::local:
      // A convex neighborhood of x is a convex superset of minopen(x).
      return convex_hull(s, s.topology().minopen(x)).is_subset_of(nbhd);
  }
  return false;
}

PropertyReport convexity_at(const PreorderedSpace& s, int x, ConvKind kind) {
  require(x >= 0 && x < s.size(), Err::PointOutOfRange, "point " + std::to_string(x));
  const char* name = kind == ConvKind::convex  ? "convex-at"
                     : kind == ConvKind::weak ? "weakly-convex-at"
                                              : "locally-convex-at";
  if (convexity_at_in_nbhd(s, x, s.topology().minopen(x), kind)) return PropertyReport::pass(name);
  return PropertyReport::fail(name, {{x}, {s.topology().minopen(x)}, "no fitting neighborhood inside minopen(x)"});
}

namespace {
PropertyReport all_points(const PreorderedSpace& s, ConvKind kind, const std::string& name) {
  for (int x = 0; x < s.size(); ++x) {
    PropertyReport r = convexity_at(s, x, kind);
    if (!r.verdict) return PropertyReport::fail(name, std::move(*r.witness));
  }
  return PropertyReport::pass(name);
}
}  // namespace

PropertyReport is_convex(const PreorderedSpace& s) { return all_points(s, ConvKind::convex, "convex"); }
PropertyReport is_weakly_convex(const PreorderedSpace& s) {
  return all_points(s, ConvKind::weak, "weakly-convex");
}
PropertyReport is_locally_convex(const PreorderedSpace& s) {
  return all_points(s, ConvKind::local, "locally-convex");
}

PropertyReport is_I_space(const PreorderedSpace& s) {
  // Hulls distribute over unions and opens are unions of minimal opens, so
  // the minimal opens generate the quantifier.
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (Dir dir : {Dir::inc, Dir::dec}) {
      Bits h = hull(s, s.topology().minopen(x), dir);
      if (!s.topology().is_open(h))
        return PropertyReport::fail("I-space", {{x}, {h}, dir == Dir::inc ? "i(minopen(x)) not open"
                                                                          : "d(minopen(x)) not open"});
    }
  return PropertyReport::pass("I-space");
}

PropertyReport is_C_space(const PreorderedSpace& s) {
  int n = s.size();
  for (int x = 0; x < n; ++x) {
    Bits cl = s.topology().closure(Bits::single(n, x));
    for (Dir dir : {Dir::inc, Dir::dec}) {
      Bits h = hull(s, cl, dir);
      if (!s.topology().is_closed(h))
        return PropertyReport::fail("C-space", {{x}, {h}, dir == Dir::inc ? "i(cl{x}) not closed"
                                                                          : "d(cl{x}) not closed"});
    }
  }
  return PropertyReport::pass("C-space");
}

PropertyReport is_k_preserving(const PreorderedSpace&) {
  // Every subset of a finite space is compact, and convex hulls stay inside
  // the space, so the property cannot fail here.
  return PropertyReport::pass("k-preserving");
}

bool class_indistinguishable(const PreorderedSpace& s, int x) {
  int n = s.size();
  require(x >= 0 && x < n, Err::PointOutOfRange, "point " + std::to_string(x));
  Bits cls = convex_hull(s, Bits::single(n, x));
  int ref = cls.first();
  for (int y = cls.first(); y >= 0; y = cls.next(y))
    if (s.topology().minopen(y) != s.topology().minopen(ref)) return false;
  return true;
}

bool revalidate_witness(const PreorderedSpace& s, const PropertyReport& r) {
  if (r.verdict || !r.witness) return false;
  const Witness& w = *r.witness;
  const std::string& p = r.property;
  if (p == "T1-preordered")
    return w.points.size() == 1 && !s.topology().is_closed(w.sets.at(0)) &&
           (w.sets.at(0) == hull(s, Bits::single(s.size(), w.points[0]), Dir::inc) ||
            w.sets.at(0) == hull(s, Bits::single(s.size(), w.points[0]), Dir::dec));
  if (p == "T2-preordered") {
    int x = w.points.at(0), y = w.points.at(1);
    return !s.leq(x, y) && product_closure(s, s.order()).at(x, y);
  }
  if (p == "normally-preordered" || p == "regularly-preordered") {
    if (w.sets.size() != 2) {  // T1 precondition failure carries the T1 witness
      PropertyReport t1 = is_T1_preordered(s);
      return !t1.verdict;
    }
    const Bits &a = w.sets[0], &b = w.sets[1];
    bool shape = s.topology().is_closed(a) && s.topology().is_closed(b) &&
                 hull(s, a, Dir::dec) == a && hull(s, b, Dir::inc) == b && !a.intersects(b);
    return shape && open_monotone_hull(s, a, Dir::dec).intersects(open_monotone_hull(s, b, Dir::inc));
  }
  if (p == "convex" || p == "convex-at") return !convexity_at(s, w.points.at(0), ConvKind::convex).verdict;
  if (p == "weakly-convex" || p == "weakly-convex-at")
    return !convexity_at(s, w.points.at(0), ConvKind::weak).verdict;
  if (p == "locally-convex" || p == "locally-convex-at")
    return !convexity_at(s, w.points.at(0), ConvKind::local).verdict;
  if (p == "I-space")
    return !s.topology().is_open(hull(s, s.topology().minopen(w.points.at(0)), Dir::inc)) ||
           !s.topology().is_open(hull(s, s.topology().minopen(w.points.at(0)), Dir::dec));
  if (p == "C-space") {
    Bits cl = s.topology().closure(Bits::single(s.size(), w.points.at(0)));
    return !s.topology().is_closed(hull(s, cl, Dir::inc)) ||
           !s.topology().is_closed(hull(s, cl, Dir::dec));
  }
  return false;
}

std::vector<PropertyReport> property_battery(const PreorderedSpace& s) {
  std::vector<PropertyReport> out;
  out.push_back(is_T1_preordered(s));
  out.push_back(is_T2_preordered(s));
  out.push_back(is_normally_preordered(s));
  out.push_back(is_regularly_preordered(s));
  out.push_back(is_convex(s));
  out.push_back(is_weakly_convex(s));
  out.push_back(is_locally_convex(s));
  out.push_back(is_I_space(s));
  out.push_back(is_C_space(s));
  out.push_back(is_k_preserving(s));
  return out;
}

}  // namespace preord
