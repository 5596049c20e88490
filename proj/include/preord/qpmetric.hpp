#pragma once

#include <vector>

#include "preord/props.hpp"
#include "preord/rational.hpp"
#include "preord/space.hpp"

namespace preord {

// Quasi-pseudo-metric: zero on the diagonal, triangle inequality, no
// symmetry requirement. The conjugate p^{-1}(x,y) = p(y,x) is derived on the
// fly, never stored.
struct QuasiPseudoMetric {
  std::vector<std::vector<Rat>> d;

  int size() const { return int(d.size()); }
  const Rat& at(int x, int y) const { return d[x][y]; }
  Rat conj_at(int x, int y) const { return d[y][x]; }
  Rat sym_at(int x, int y) const { return Rat::max(d[x][y], d[y][x]); }
};

// Axiom check; used as the precondition of the verifiers below.
bool is_quasi_pseudo_metric(const QuasiPseudoMetric& p);

// The topology whose minimal open at x is the intersection of all balls
// around x; for a finite quasi-pseudo-metric that is the zero set
// { y : d(x,y) = 0 }, and the base property follows from the triangle
// inequality.
FiniteTopology topology_from_metric(const QuasiPseudoMetric& p, bool symmetrize);

// Upper topology (opens = open increasing sets) or lower topology.
FiniteTopology monotone_topology(const PreorderedSpace& s, Dir dir);

// p(x,y) = max over the separating family of max(0, f(x) - f(y)). Requires
// the space to be completely regularly preordered.
QuasiPseudoMetric synthesize_qpm(const PreorderedSpace& s);

// p(x,y) = 0 if x <= y else 1; valid on discrete-topology spaces.
QuasiPseudoMetric qpm_from_order_discrete(const PreorderedSpace& s);

// Admissible pair: the symmetrized metric generates the topology and the
// zero set of p is exactly the graph of the order.
PropertyReport check_admissible(const PreorderedSpace& s, const QuasiPseudoMetric& p);

// Strict: the space is convex and T1-preordered, p generates the upper
// topology and its conjugate generates the lower topology.
PropertyReport check_strict(const PreorderedSpace& s, const QuasiPseudoMetric& p);

}  // namespace preord
