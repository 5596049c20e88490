#include "preord/separation.hpp"

#include <algorithm>

#include "preord/closure_ops.hpp"

namespace preord {

bool check_isotone(const PreorderedSpace& s, const IsotoneFunction& f) {
  int n = s.size();
  require(int(f.values.size()) == n, Err::SizeMismatch, "function width differs from space");
  for (int x = 0; x < n; ++x) {
    const Bits& row = s.order().row(x);
    for (int y = row.first(); y >= 0; y = row.next(y))
      if (f.values[y] < f.values[x]) return false;
  }
  return true;
}

bool check_continuous(const PreorderedSpace& s, const IsotoneFunction& f) {
  int n = s.size();
  require(int(f.values.size()) == n, Err::SizeMismatch, "function width differs from space");
  // Check every threshold between consecutive values: the strict upper and
  // strict lower preimages must both be open.
  std::vector<Rat> vals = f.values;
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (size_t k = 0; k + 1 < vals.size(); ++k) {
    Bits upper(n), lower(n);
    for (int x = 0; x < n; ++x) {
      if (f.values[x] >= vals[k + 1]) upper.set(x);
      if (f.values[x] <= vals[k]) lower.set(x);
    }
    if (!s.topology().is_open(upper) || !s.topology().is_open(lower)) return false;
  }
  return true;
}

namespace {

// Largest open decreasing U with D(U) inside W; assembled from the per-point
// generators od({x}) whose closed decreasing hulls fit.
struct StageBuilder {
  const PreorderedSpace& s;
  std::vector<Bits> od_pt, closed_od_pt;

  explicit StageBuilder(const PreorderedSpace& sp) : s(sp) {
    int n = s.size();
    for (int x = 0; x < n; ++x) {
      od_pt.push_back(open_monotone_hull(s, Bits::single(n, x), Dir::dec));
      closed_od_pt.push_back(closed_hull(s, od_pt.back(), Dir::dec));
    }
  }

  Bits largest_admissible(const Bits& w) const {
    Bits u(s.size());
    for (int x = 0; x < s.size(); ++x)
      if (closed_od_pt[x].is_subset_of(w)) u |= od_pt[x];
    return u;
  }
};

void check_pair(const PreorderedSpace& s, const Bits& a, const Bits& b) {
  s.check(a);
  s.check(b);
  require(s.topology().is_closed(a) && hull(s, a, Dir::dec) == a, Err::BadArguments,
          "A must be closed and decreasing");
  require(s.topology().is_closed(b) && hull(s, b, Dir::inc) == b, Err::BadArguments,
          "B must be closed and increasing");
  require(!a.intersects(b), Err::BadArguments, "A and B must be disjoint");
}

}  // namespace

IsotoneFunction separate_monotone(const PreorderedSpace& s, const Bits& a, const Bits& b) {
  require(is_normally_preordered(s).verdict, Err::NotNormal, "space is not normally preordered");
  check_pair(s, a, b);
  int n = s.size();

  // Stage sets: the largest open decreasing set whose closed decreasing hull
  // avoids B, then repeatedly the largest one fitting inside the previous
  // stage. Chains of distinct open decreasing sets are short, so this stops
  // within n rounds; f takes 1 outside the first stage, halves per stage and
  // 0 on the stable core.
  std::vector<Bits> stages;
  StageBuilder sb(s);
  Bits cur = sb.largest_admissible(b.complement());
  while (true) {
    stages.push_back(cur);
    Bits next = sb.largest_admissible(cur);
    if (next == cur) break;
    cur = next;
  }

  IsotoneFunction f;
  f.values.assign(n, Rat(1, 1));
  Rat level(1, 1);
  for (size_t m = 0; m < stages.size(); ++m) {
    level = Rat(level.num, level.den * 2);
    bool stable = (m + 1 == stages.size());
    for (int x = stages[m].first(); x >= 0; x = stages[m].next(x))
      f.values[x] = stable ? Rat(0, 1) : level;
  }

  // Postconditions are guaranteed by normality; a breach is an internal bug.
  for (int x = a.first(); x >= 0; x = a.next(x))
    require(f.values[x].is_zero(), Err::Internal, "separator not 0 on A");
  for (int x = b.first(); x >= 0; x = b.next(x))
    require(f.values[x] == Rat(1, 1), Err::Internal, "separator not 1 on B");
  require(check_isotone(s, f), Err::Internal, "separator not isotone");
  require(check_continuous(s, f), Err::Internal, "separator not continuous");
  return f;
}

std::vector<IsotoneFunction> separating_family(const PreorderedSpace& s) {
  require(is_convex(s).verdict, Err::NotConvex, "space is not convex");
  require(is_normally_preordered(s).verdict, Err::NotNormal, "space is not normally preordered");
  int n = s.size();
  std::vector<IsotoneFunction> family;
  auto add = [&](IsotoneFunction f) {
    if (std::find(family.begin(), family.end(), f) == family.end()) family.push_back(std::move(f));
  };

  for (int x = 0; x < n; ++x) {
    Bits pt = Bits::single(n, x);
    // Convexity witness at x: the smallest open monotone pair around x.
    Bits v = open_monotone_hull(s, pt, Dir::inc);
    Bits u = open_monotone_hull(s, pt, Dir::dec);
    Bits ix = hull(s, pt, Dir::inc);
    Bits dx = hull(s, pt, Dir::dec);
    if (v.complement().any()) add(separate_monotone(s, v.complement(), ix));
    if (u.complement().any()) {
      IsotoneFunction g = separate_monotone(s, dx, u.complement());
      add(std::move(g));
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!s.leq(x, y))
        add(separate_monotone(s, hull(s, Bits::single(n, y), Dir::dec), hull(s, Bits::single(n, x), Dir::inc)));
  return family;
}

std::pair<bool, std::string> complete_regularity_oracle(const PreorderedSpace& s) {
  int n = s.size();
  auto fns = isotone_functions_to_chain(s, s.order(), n + 1);
  // Condition on the topology: the minimal open of x must equal the common
  // fiber of the family at x.
  for (int x = 0; x < n; ++x) {
    Bits fiber = Bits::full(n);
    for (const ChainFn& f : fns) {
      Bits eq(n);
      for (int y = 0; y < n; ++y)
        if (f[y] == f[x]) eq.set(y);
      fiber &= eq;
    }
    if (fiber != s.topology().minopen(x))
      return {false, "condition (i) fails at point " + std::to_string(x)};
  }
  // Condition on the order: non-related pairs must be separated by values.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (s.leq(x, y)) continue;
      bool sep = false;
      for (const ChainFn& f : fns)
        if (f[x] > f[y]) {
          sep = true;
          break;
        }
      if (!sep) return {false, "condition (ii) fails at pair (" + std::to_string(x) + "," + std::to_string(y) + ")"};
    }
  return {true, ""};
}

CompleteRegularityReport check_completely_regular(const PreorderedSpace& s) {
  CompleteRegularityReport rep;
  PropertyReport conv = is_convex(s);
  PropertyReport norm = conv.verdict ? is_normally_preordered(s) : PropertyReport::pass("normally-preordered");
  rep.verdict = conv.verdict && norm.verdict;
  if (rep.verdict) {
    rep.family = separating_family(s);
  } else {
    rep.failed_precondition = conv.verdict ? norm : conv;
  }
  if (s.size() <= 4) {
    auto [oracle, note] = complete_regularity_oracle(s);
    require(oracle == rep.verdict, Err::Internal,
            "complete-regularity verdict disagrees with enumeration: " + note);
    if (!rep.verdict) rep.note = note;
  }
  return rep;
}

bool chain_separator_exists(const PreorderedSpace& s, const Bits& a, const Bits& b, int levels) {
  s.check(a);
  s.check(b);
  for (const ChainFn& f : isotone_functions_to_chain(s, s.order(), levels)) {
    bool ok = true;
    for (int x = a.first(); ok && x >= 0; x = a.next(x)) ok = (f[x] == 0);
    for (int x = b.first(); ok && x >= 0; x = b.next(x)) ok = (f[x] == levels - 1);
    if (ok) return true;
  }
  return false;
}

}  // namespace preord
