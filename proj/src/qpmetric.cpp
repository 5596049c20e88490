#include "preord/qpmetric.hpp"

#include "preord/separation.hpp"

namespace preord {

bool is_quasi_pseudo_metric(const QuasiPseudoMetric& p) {
  int n = p.size();
  Rat zero(0, 1);
  for (int x = 0; x < n; ++x) {
    if (int(p.d[x].size()) != n) return false;
    if (!p.d[x][x].is_zero()) return false;
    for (int y = 0; y < n; ++y)
      if (p.d[x][y] < zero) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.d[x][y] + p.d[y][z] < p.d[x][z]) return false;
  return true;
}

FiniteTopology topology_from_metric(const QuasiPseudoMetric& p, bool symmetrize) {
  int n = p.size();
  std::vector<Bits> minopen(n, Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Rat v = symmetrize ? p.sym_at(x, y) : p.at(x, y);
      if (v.is_zero()) minopen[x].set(y);
    }
  return FiniteTopology(std::move(minopen));
}

FiniteTopology monotone_topology(const PreorderedSpace& s, Dir dir) {
  int n = s.size();
  std::vector<Bits> minopen;
  minopen.reserve(n);
  for (int x = 0; x < n; ++x) minopen.push_back(open_monotone_hull(s, Bits::single(n, x), dir));
  return FiniteTopology(std::move(minopen));
}

QuasiPseudoMetric synthesize_qpm(const PreorderedSpace& s) {
  CompleteRegularityReport cr = check_completely_regular(s);
  require(cr.verdict, Err::NotCompletelyRegular, "space is not completely regularly preordered");
  int n = s.size();
  QuasiPseudoMetric p;
  p.d.assign(n, std::vector<Rat>(n, Rat(0, 1)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (const IsotoneFunction& f : cr.family) {
        Rat diff = f.values[x] - f.values[y];
        if (p.d[x][y] < diff) p.d[x][y] = diff;
      }
  return p;
}

QuasiPseudoMetric qpm_from_order_discrete(const PreorderedSpace& s) {
  require(s.topology().is_discrete(), Err::NotDiscrete, "topology is not discrete");
  int n = s.size();
  QuasiPseudoMetric p;
  p.d.assign(n, std::vector<Rat>(n, Rat(0, 1)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!s.leq(x, y)) p.d[x][y] = Rat(1, 1);
  return p;
}

namespace {
void require_qpm(const PreorderedSpace& s, const QuasiPseudoMetric& p) {
  require(p.size() == s.size(), Err::SizeMismatch, "metric size differs from space");
  require(is_quasi_pseudo_metric(p), Err::NotAQPM, "table violates the quasi-pseudo-metric axioms");
}
}  // namespace

PropertyReport check_admissible(const PreorderedSpace& s, const QuasiPseudoMetric& p) {
  require_qpm(s, p);
  int n = s.size();
  FiniteTopology sym = topology_from_metric(p, true);
  for (int x = 0; x < n; ++x)
    if (sym.minopen(x) != s.topology().minopen(x))
      return PropertyReport::fail("admissible",
                                  {{x}, {sym.minopen(x)}, "symmetrized metric topology differs at x"});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.at(x, y).is_zero() != s.leq(x, y))
        return PropertyReport::fail("admissible", {{x, y}, {}, "zero set of p differs from the order graph"});
  return PropertyReport::pass("admissible");
}

PropertyReport check_strict(const PreorderedSpace& s, const QuasiPseudoMetric& p) {
  require_qpm(s, p);
  PropertyReport conv = is_convex(s);
  if (!conv.verdict) return PropertyReport::fail("strict", std::move(*conv.witness));
  PropertyReport t1 = is_T1_preordered(s);
  if (!t1.verdict) return PropertyReport::fail("strict", std::move(*t1.witness));

  FiniteTopology upper = topology_from_metric(p, false);
  FiniteTopology expected_upper = monotone_topology(s, Dir::inc);
  if (upper != expected_upper)
    return PropertyReport::fail("strict", {{}, {}, "p does not generate the upper topology"});

  QuasiPseudoMetric conj;
  int n = s.size();
  conj.d.assign(n, std::vector<Rat>(n, Rat(0, 1)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) conj.d[x][y] = p.at(y, x);
  FiniteTopology lower = topology_from_metric(conj, false);
  if (lower != monotone_topology(s, Dir::dec))
    return PropertyReport::fail("strict", {{}, {}, "conjugate does not generate the lower topology"});
  return PropertyReport::pass("strict");
}

}  // namespace preord
