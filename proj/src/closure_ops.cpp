#include "preord/closure_ops.hpp"

#include <cmath>

namespace preord {

Relation smallest_closed_preorder(const FiniteTopology& top, const Relation& r) {
  require(top.size() == r.size(), Err::SizeMismatch, "relation size differs from topology");
  Relation cur = r.reflexive_closure();
  while (true) {
    Relation next = product_closure(top, cur.transitive_closure());
    if (next == cur) return cur;
    cur = next;
  }
}

bool is_generated_by(const PreorderedSpace& s, const Relation& r) {
  require(r.size() == s.size(), Err::SizeMismatch, "relation size differs from space");
  require(s.order().contains(r), Err::NotASubrelation, "R is not a subrelation of the order");
  return smallest_closed_preorder(s.topology(), r) == s.order();
}

std::vector<ChainFn> isotone_functions_to_chain(const PreorderedSpace& s, const Relation& r, int levels,
                                                size_t cap) {
  require(levels >= 1, Err::BadParameters, "need at least one level");
  require(r.size() == s.size(), Err::SizeMismatch, "relation size differs from space");
  int n = s.size();
  double total = std::pow(double(levels), double(n));
  require(total <= double(cap), Err::InstanceTooLarge,
          "levels^n = " + std::to_string(levels) + "^" + std::to_string(n) + " exceeds cap");

  std::vector<ChainFn> out;
  ChainFn f(n, 0);
  auto valid = [&]() {
    for (int x = 0; x < n; ++x) {
      // Continuity: constant on each minimal open set.
      const Bits& m = s.topology().minopen(x);
      for (int y = m.first(); y >= 0; y = m.next(y))
        if (f[y] != f[x]) return false;
      // Isotone for R.
      const Bits& row = r.row(x);
      for (int y = row.first(); y >= 0; y = row.next(y))
        if (f[x] > f[y]) return false;
    }
    return true;
  };
  while (true) {
    if (valid()) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == levels - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

bool isotone_sets_coincide(const PreorderedSpace& s, const Relation& r, int levels) {
  require(s.order().contains(r), Err::NotASubrelation, "R is not a subrelation of the order");
  require(is_generated_by(s, r), Err::BadArguments, "order is not generated by R");
  return isotone_functions_to_chain(s, r, levels) == isotone_functions_to_chain(s, s.order(), levels);
}

}  // namespace preord
