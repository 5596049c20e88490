#include "preord/grid.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <random>

#include "preord/parallel.hpp"

namespace preord {

namespace {
constexpr int kMaterializeCap = 1 << 14;  // largest site count for full relation tables

int ceil_div(int a, int b) { return (a + b - 1) / b; }
int slope_cap(Slope s) { return s.q * ceil_div(s.p, s.q); }
}  // namespace

ConeGrid::ConeGrid(int t_extent, int x_extent, Slope slope, bool time_periodic)
    : T_(t_extent), X_(x_extent), periodic_(time_periodic), removed_(t_extent * x_extent),
      slope_(size_t(t_extent) * x_extent, slope) {
  require(T_ >= 1 && X_ >= 1, Err::BadParameters, "grid extents must be positive");
  require(slope.p >= 1 && slope.q >= 1, Err::BadParameters, "slope must be positive");
}

void ConeGrid::remove_site(int t, int x) {
  require(in_grid(t, x), Err::PointOutOfRange, "removed site outside the grid");
  removed_.set(id(t, x));
}

void ConeGrid::set_slope(int t, int x, Slope s) {
  require(in_grid(t, x), Err::PointOutOfRange, "slope site outside the grid");
  require(s.p >= 1 && s.q >= 1, Err::BadParameters, "slope must be positive");
  slope_[id(t, x)] = s;
  homogeneous_ = false;
}

Slope ConeGrid::uniform_slope() const {
  require(homogeneous_, Err::BadParameters, "grid has per-site slopes");
  return slope_[0];
}

Relation one_step_relation(const ConeGrid& g) {
  int n = g.sites(), X = g.space_extent(), T = g.time_extent();
  Relation r(n);
  for (int t = 0; t < T; ++t) {
    int tn = t + 1;
    if (tn == T) {
      if (!g.time_periodic()) continue;
      tn = 0;
    }
    for (int x = 0; x < X; ++x) {
      if (!g.live(t, x)) continue;
      Slope s = g.slope_at(t, x);
      int m = ceil_div(s.p, s.q);  // fresh-bucket single-step allowance
      for (int dx = -m; dx <= m; ++dx) {
        int xn = x + dx;
        if (xn >= 0 && xn < X && g.live(tn, xn)) r.add(g.id(t, x), g.id(tn, xn));
      }
    }
  }
  return r;
}

namespace {

// Frontier propagation over automaton states (site, credit, cooldown).
// credit is the lateral token bucket for rational slopes (cost q per unit,
// grant p per step, capped); cooldown gates the widening bonus of one extra
// lateral unit, usable when it reaches zero.
struct ReachParams {
  int bonus_k = 0;            // 0 disables the bonus
  bool ignore_removed = false;
  bool strict = false;        // strict-interior (chronological) variant
};

// Scalar breadth-first kernel; handles periodic wrap, per-site slopes and
// any rational slope. Used where the bit-parallel kernel does not apply.
Bits scalar_reach(const ConeGrid& g, const Bits& sources, const ReachParams& prm) {
  int X = g.space_extent(), T = g.time_extent(), n = g.sites();
  int maxcap = 1;
  for (int t = 0; t < T; ++t)
    for (int x = 0; x < X; ++x) maxcap = std::max(maxcap, slope_cap(g.slope_at(t, x)));
  int cd_states = prm.bonus_k > 0 ? prm.bonus_k : 1;
  auto state_id = [&](int site, int credit, int cd) { return (site * (maxcap + 1) + credit) * cd_states + cd; };

  std::vector<char> seen(size_t(n) * (maxcap + 1) * cd_states, 0);
  Bits reached(n);
  std::deque<std::tuple<int, int, int>> queue;
  for (int s = sources.first(); s >= 0; s = sources.next(s)) {
    if (!prm.ignore_removed && !g.live_id(s)) continue;
    int credit = prm.strict ? std::max(0, slope_cap(g.slope_at(g.t_of(s), g.x_of(s))) - g.slope_at(g.t_of(s), g.x_of(s)).q)
                            : slope_cap(g.slope_at(g.t_of(s), g.x_of(s)));
    reached.set(s);
    if (!seen[state_id(s, credit, 0)]) {
      seen[state_id(s, credit, 0)] = 1;
      queue.emplace_back(s, credit, 0);
    }
  }
  while (!queue.empty()) {
    auto [site, credit, cd] = queue.front();
    queue.pop_front();
    int t = g.t_of(site), x = g.x_of(site);
    int tn = t + 1;
    if (tn == T) {
      if (!g.time_periodic()) continue;
      tn = 0;
    }
    Slope sl = g.slope_at(t, x);
    int m = std::min(credit / sl.q, ceil_div(sl.p, sl.q));
    auto push = [&](int xn, int cost, int cd_next) {
      if (xn < 0 || xn >= X) return;
      int target = g.id(tn, xn);
      if (!prm.ignore_removed && !g.live_id(target)) return;
      Slope tsl = g.slope_at(tn, xn);
      int credit_next = std::min(credit - cost + sl.p, slope_cap(tsl));
      credit_next = std::max(credit_next, 0);
      if (!seen[state_id(target, credit_next, cd_next)]) {
        seen[state_id(target, credit_next, cd_next)] = 1;
        reached.set(target);
        queue.emplace_back(target, credit_next, cd_next);
      }
    };
    int cd_dec = std::max(cd - 1, 0);
    for (int dx = -m; dx <= m; ++dx) push(x + dx, sl.q * std::abs(dx), cd_dec);
    if (prm.bonus_k > 0 && cd == 0) {
      push(x + m + 1, sl.q * m, prm.bonus_k - 1);
      push(x - m - 1, sl.q * m, prm.bonus_k - 1);
    }
  }
  return reached;
}

bool integer_uniform(const ConeGrid& g) { return g.homogeneous() && g.uniform_slope().q == 1; }

Bits expand_pm(const Bits& row, int p) {
  Bits r = row;
  for (int d = 1; d <= p; ++d) {
    r |= row.shifted_up(d);
    r |= row.shifted_down(d);
  }
  return r;
}

// Bit-parallel time-slice kernel for non-periodic grids with a homogeneous
// integer slope; cooldown planes realize the bonus automaton.
Bits sliced_reach(const ConeGrid& g, const Bits& sources, const ReachParams& prm) {
  int X = g.space_extent(), T = g.time_extent();
  int p = g.uniform_slope().p;
  int planes_n = prm.bonus_k > 0 ? prm.bonus_k : 1;
  Bits reached(g.sites());

  // Source x-positions per time slice (single-source for strict mode).
  int src_t = -1, src_x = -1;
  if (prm.strict) {
    require(sources.count() == 1, Err::Internal, "strict reach expects one source");
    src_t = g.t_of(sources.first());
    src_x = g.x_of(sources.first());
  }

  std::vector<Bits> plane(planes_n, Bits(X)), next(planes_n, Bits(X));
  for (int t = 0; t < T; ++t) {
    // Inject sources of this slice with a fresh automaton state.
    for (int x = 0; x < X; ++x) {
      int site = g.id(t, x);
      if (sources.test(site) && (prm.ignore_removed || g.live_id(site))) {
        if (!prm.strict) plane[0].set(x);
        reached.set(site);
      }
    }
    if (prm.strict && t == src_t) plane[0].set(src_x);

    if (t + 1 >= T) break;
    bool any = false;
    for (const Bits& pl : plane) any = any || pl.any();
    if (!any) continue;

    for (int c = 0; c < planes_n; ++c) next[c].clear();
    for (int c = 0; c < planes_n; ++c) {
      if (plane[c].none()) continue;
      int cd = std::max(c - 1, 0);
      next[cd] |= expand_pm(plane[c], p);
    }
    if (prm.bonus_k > 0 && plane[0].any()) {
      next[prm.bonus_k - 1] |= plane[0].shifted_up(p + 1);
      next[prm.bonus_k - 1] |= plane[0].shifted_down(p + 1);
    }

    // Masks: removed sites and, for the strict variant, the strict cone.
    Bits mask = Bits::full(X);
    if (!prm.ignore_removed) {
      for (int x = 0; x < X; ++x)
        if (!g.live(t + 1, x)) mask.reset(x);
    }
    if (prm.strict) {
      int tau = t + 1 - src_t;
      Bits cone(X);
      for (int x = 0; x < X; ++x)
        if (std::abs(x - src_x) <= p * tau - 1) cone.set(x);
      mask &= cone;
    }
    for (int c = 0; c < planes_n; ++c) {
      next[c] &= mask;
      plane[c] = next[c];
      for (int x = plane[c].first(); x >= 0; x = plane[c].next(x)) reached.set(g.id(t + 1, x));
    }
  }
  return reached;
}

Bits reach(const ConeGrid& g, const Bits& sources, const ReachParams& prm) {
  if (!g.time_periodic() && integer_uniform(g) && (!prm.strict || sources.count() == 1))
    return sliced_reach(g, sources, prm);
  return scalar_reach(g, sources, prm);
}

Bits backward_reach(const ConeGrid& g, const Bits& targets, const ReachParams& prm) {
  require(integer_uniform(g), Err::BadParameters, "past reach requires a uniform integer slope");
  int X = g.space_extent(), T = g.time_extent();
  int p = g.uniform_slope().p;
  int planes_n = prm.bonus_k > 0 ? prm.bonus_k : 1;
  Bits reached(g.sites());

  if (!g.time_periodic()) {
    std::vector<Bits> plane(planes_n, Bits(X)), next(planes_n, Bits(X));
    for (int t = T - 1; t >= 0; --t) {
      for (int x = 0; x < X; ++x) {
        int site = g.id(t, x);
        if (targets.test(site) && (prm.ignore_removed || g.live_id(site))) {
          plane[0].set(x);
          reached.set(site);
        }
      }
      if (t == 0) break;
      bool any = false;
      for (const Bits& pl : plane) any = any || pl.any();
      if (!any) continue;
      for (int c = 0; c < planes_n; ++c) next[c].clear();
      for (int c = 0; c < planes_n; ++c) {
        if (plane[c].none()) continue;
        next[std::max(c - 1, 0)] |= expand_pm(plane[c], p);
      }
      if (prm.bonus_k > 0 && plane[0].any()) {
        next[prm.bonus_k - 1] |= plane[0].shifted_up(p + 1);
        next[prm.bonus_k - 1] |= plane[0].shifted_down(p + 1);
      }
      Bits mask = Bits::full(X);
      if (!prm.ignore_removed) {
        for (int x = 0; x < X; ++x)
          if (!g.live(t - 1, x)) mask.reset(x);
      }
      for (int c = 0; c < planes_n; ++c) {
        next[c] &= mask;
        plane[c] = next[c];
        for (int x = plane[c].first(); x >= 0; x = plane[c].next(x)) reached.set(g.id(t - 1, x));
      }
    }
    return reached;
  }

  // Periodic: breadth-first over predecessor steps (uniform integer slope,
  // so single steps reverse exactly).
  std::deque<std::pair<int, int>> queue;  // (site, cooldown)
  int cd_states = planes_n;
  std::vector<char> seen(size_t(g.sites()) * cd_states, 0);
  for (int s = targets.first(); s >= 0; s = targets.next(s)) {
    if (!prm.ignore_removed && !g.live_id(s)) continue;
    reached.set(s);
    seen[size_t(s) * cd_states] = 1;
    queue.emplace_back(s, 0);
  }
  while (!queue.empty()) {
    auto [site, cd] = queue.front();
    queue.pop_front();
    int t = g.t_of(site), x = g.x_of(site);
    int tp = t - 1;
    if (tp < 0) tp = T - 1;
    auto push = [&](int xp, int cd_next) {
      if (xp < 0 || xp >= X) return;
      int prev = g.id(tp, xp);
      if (!prm.ignore_removed && !g.live_id(prev)) return;
      if (!seen[size_t(prev) * cd_states + cd_next]) {
        seen[size_t(prev) * cd_states + cd_next] = 1;
        reached.set(prev);
        queue.emplace_back(prev, cd_next);
      }
    };
    int cd_dec = std::max(cd - 1, 0);
    for (int dx = -p; dx <= p; ++dx) push(x + dx, cd_dec);
    if (prm.bonus_k > 0 && cd == 0) {
      push(x + p + 1, prm.bonus_k - 1);
      push(x - p - 1, prm.bonus_k - 1);
    }
  }
  return reached;
}

void check_materializable(const ConeGrid& g) {
  require(g.sites() <= kMaterializeCap, Err::InstanceTooLarge,
          "relation table over " + std::to_string(g.sites()) + " sites; use the streaming checks");
}

}  // namespace

Bits j_plus_row(const ConeGrid& g, int source) {
  require(source >= 0 && source < g.sites(), Err::PointOutOfRange, "source site");
  if (!g.live_id(source)) return Bits(g.sites());
  return reach(g, Bits::single(g.sites(), source), {});
}

Bits j_plus_of_set(const ConeGrid& g, const Bits& sources) {
  require(sources.size() == g.sites(), Err::SizeMismatch, "source set width");
  return reach(g, sources, {});
}

Bits j_minus_of_set(const ConeGrid& g, const Bits& targets) {
  require(targets.size() == g.sites(), Err::SizeMismatch, "target set width");
  return backward_reach(g, targets, {});
}

Bits i_plus_row(const ConeGrid& g, int source) {
  require(source >= 0 && source < g.sites(), Err::PointOutOfRange, "source site");
  if (!g.live_id(source)) return Bits(g.sites());
  ReachParams prm;
  prm.strict = true;
  Bits r = reach(g, Bits::single(g.sites(), source), prm);
  // Strict reach seeds the source for propagation; keep it only if a cycle
  // actually returns, which the non-periodic kernels never do.
  if (!g.time_periodic()) r.reset(source);
  return r;
}

Bits widened_row(const ConeGrid& g, int source, int k) {
  require(k >= 1, Err::BadParameters, "slack index must be at least 1");
  require(source >= 0 && source < g.sites(), Err::PointOutOfRange, "source site");
  if (!g.live_id(source)) return Bits(g.sites());
  Bits src = Bits::single(g.sites(), source);
  ReachParams bonus;
  bonus.bonus_k = k;
  ReachParams envelope;
  envelope.ignore_removed = true;
  return reach(g, src, bonus) & reach(g, src, envelope);
}

GridRelation j_plus(const ConeGrid& g) {
  check_materializable(g);
  int n = g.sites();
  std::vector<Bits> rows(n, Bits(n));
  parallel_chunks(n, [&](int b, int e) {
    for (int s = b; s < e; ++s)
      if (g.live_id(s)) rows[s] = j_plus_row(g, s);
  });
  Relation rel(std::move(rows));
  // Rational slopes can make raw bucket reach non-transitive (a path may
  // arrive with an empty bucket); close it.
  if (!integer_uniform(g)) rel = rel.transitive_closure();
  return {std::move(rel), g.homogeneous() ? g.uniform_slope() : Slope{0, 0}, 0};
}

GridRelation widened_reach(const ConeGrid& g, int k) {
  check_materializable(g);
  require(k >= 1, Err::BadParameters, "slack index must be at least 1");
  int n = g.sites();
  std::vector<Bits> rows(n, Bits(n));
  parallel_chunks(n, [&](int b, int e) {
    for (int s = b; s < e; ++s)
      if (g.live_id(s)) rows[s] = widened_row(g, s, k);
  });
  Relation rel = Relation(std::move(rows)).transitive_closure();
  return {std::move(rel), g.homogeneous() ? g.uniform_slope() : Slope{0, 0}, k};
}

SeifertResult seifert_approx(const ConeGrid& g, int k_max) {
  require(k_max >= 2, Err::BadParameters, "k_max must be at least 2");
  check_materializable(g);
  std::vector<Relation> rels;
  rels.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) rels.push_back(widened_reach(g, k).rel);
  Relation meet = rels[0];
  for (int k = 1; k < k_max; ++k) meet = meet.intersected(rels[k]);
  require(meet == rels.back(), Err::Internal, "widened chain is not monotone in the slack index");
  bool stabilized = rels[k_max - 2] == rels[k_max - 1];
  return {{std::move(meet), g.homogeneous() ? g.uniform_slope() : Slope{0, 0}, k_max}, stabilized};
}

Bits hull_of_window(const ConeGrid& g, const GridWindow& w) {
  require(w.t0 >= 0 && w.t1 < g.time_extent() && w.x0 >= 0 && w.x1 < g.space_extent() &&
              w.t0 <= w.t1 && w.x0 <= w.x1,
          Err::WindowOutOfRange, "window outside the grid");
  Bits k(g.sites());
  for (int t = w.t0; t <= w.t1; ++t)
    for (int x = w.x0; x <= w.x1; ++x)
      if (g.live(t, x)) k.set(g.id(t, x));
  if (k.none()) return k;
  return j_plus_of_set(g, k) & j_minus_of_set(g, k);
}

const char* rung_name(CausalRung r) {
  switch (r) {
    case CausalRung::non_causal: return "non-causal";
    case CausalRung::causal: return "causal";
    case CausalRung::stably_causal: return "stably-causal~";
    case CausalRung::causally_simple: return "causally-simple~";
    case CausalRung::globally_hyperbolic: return "globally-hyperbolic";
  }
  return "?";
}

namespace {

// First symmetric non-diagonal pair of the causal relation, if any. Steps
// strictly advance time on non-periodic grids, so only periodic grids can
// close a causal curve.
std::optional<std::pair<int, int>> first_symmetric_pair(const ConeGrid& g) {
  if (!g.time_periodic()) return std::nullopt;
  check_materializable(g);
  GridRelation j = j_plus(g);
  for (int x = 0; x < g.sites(); ++x) {
    const Bits& row = j.rel.row(x);
    for (int y = row.first(); y >= 0; y = row.next(y))
      if (y != x && j.rel.at(y, x)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// Streaming comparison of the widened reach at slack k against J+;
// returns the first row-major extra pair, if any. Rows below an already
// found source still get checked, so the minimum is scheduling-independent.
std::optional<std::pair<int, int>> first_widened_extra_pair(const ConeGrid& g, int k) {
  int n = g.sites();
  std::atomic<int> best{n};
  parallel_chunks(n, [&](int b, int e) {
    for (int s = b; s < e; ++s) {
      if (s >= best.load(std::memory_order_relaxed)) break;
      if (!g.live_id(s)) continue;
      Bits extra = widened_row(g, s, k) - j_plus_row(g, s);
      if (extra.any()) {
        int cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) {
        }
        break;
      }
    }
  });
  int s = best.load();
  if (s >= n) return std::nullopt;
  Bits extra = widened_row(g, s, k) - j_plus_row(g, s);
  return std::make_pair(s, extra.first());
}

ConeGrid padded_copy(const ConeGrid& g, int& dt, int& dx) {
  dt = g.time_periodic() ? 0 : 1;
  dx = 1;
  ConeGrid out(g.time_extent() + 2 * dt, g.space_extent() + 2 * dx,
               g.homogeneous() ? g.uniform_slope() : Slope{1, 1}, g.time_periodic());
  for (int t = 0; t < g.time_extent(); ++t)
    for (int x = 0; x < g.space_extent(); ++x) {
      if (!g.live(t, x)) out.remove_site(t + dt, x + dx);
      if (!g.homogeneous()) out.set_slope(t + dt, x + dx, g.slope_at(t, x));
    }
  return out;
}

}  // namespace

GridHullReport is_globally_hyperbolic(const ConeGrid& g, int k_max, const HullCheckOptions& opts) {
  require(k_max >= 2, Err::BadParameters, "k_max must be at least 2");
  GridHullReport rep;
  auto sym = first_symmetric_pair(g);
  rep.causal = !sym.has_value();
  if (!rep.causal) return rep;

  auto extra = first_widened_extra_pair(g, k_max);
  rep.seifert_equals_jplus = !extra.has_value();
  if (!rep.seifert_equals_jplus) {
    rep.extra_pair = extra;
    return rep;
  }

  if (!integer_uniform(g)) {
    rep.verdict = true;  // hull re-embedding check needs reversible steps
    return rep;
  }

  int dt = 0, dx = 0;
  ConeGrid big = padded_copy(g, dt, dx);
  int T = g.time_extent(), X = g.space_extent();

  std::vector<GridWindow> windows;
  size_t total = size_t(T) * (T + 1) / 2 * X * (X + 1) / 2;
  if (total <= opts.exhaustive_cap) {
    for (int t0 = 0; t0 < T; ++t0)
      for (int t1 = t0; t1 < T; ++t1)
        for (int x0 = 0; x0 < X; ++x0)
          for (int x1 = x0; x1 < X; ++x1) windows.push_back({t0, x0, t1, x1});
  } else {
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.window_samples; ++i) {
      int t0 = int(rng() % T), t1 = int(rng() % T), x0 = int(rng() % X), x1 = int(rng() % X);
      if (t0 > t1) std::swap(t0, t1);
      if (x0 > x1) std::swap(x0, x1);
      windows.push_back({t0, x0, t1, x1});
    }
  }

  for (const GridWindow& w : windows) {
    Bits here = hull_of_window(g, w);
    GridWindow shifted{w.t0 + dt, w.x0 + dx, w.t1 + dt, w.x1 + dx};
    Bits there = hull_of_window(big, shifted);
    // Restrict the enlarged hull to original sites and compare.
    Bits restricted(g.sites());
    for (int s = there.first(); s >= 0; s = there.next(s)) {
      int t = big.t_of(s) - dt, x = big.x_of(s) - dx;
      if (t >= 0 && t < T && x >= 0 && x < X) restricted.set(g.id(t, x));
    }
    ++rep.windows_checked;
    if (restricted != here) {
      rep.leak_window = w;
      Bits diff = (restricted - here) | (here - restricted);
      rep.leak_site = diff.first();
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

LadderReport causality_ladder(const ConeGrid& g, int k_max, const HullCheckOptions& opts) {
  require(k_max >= 2, Err::BadParameters, "k_max must be at least 2");
  LadderReport rep;

  auto sym = first_symmetric_pair(g);
  if (sym) {
    rep.rung = CausalRung::non_causal;
    rep.symmetric_pair = sym;
    return rep;
  }
  rep.rung = CausalRung::causal;

  // Widened reaches shrink as the slack index grows, so antisymmetry for
  // some k <= k_max is antisymmetry at k_max; the smallest such k is
  // reported for the record.
  bool stably = false;
  if (!g.time_periodic()) {
    stably = true;
    rep.stable_k = 1;
  } else {
    for (int k = 1; k <= k_max && !stably; ++k)
      if (widened_reach(g, k).rel.is_antisymmetric()) {
        stably = true;
        rep.stable_k = k;
      }
  }
  if (!stably) return rep;
  rep.rung = CausalRung::stably_causal;

  auto extra = first_widened_extra_pair(g, k_max);
  rep.seifert_equals_jplus = !extra.has_value();
  if (extra) {
    rep.seifert_extra_pair = extra;
    rep.note = "widened reach exceeds J+ at slack " + std::to_string(k_max);
    return rep;
  }
  rep.rung = CausalRung::causally_simple;

  GridHullReport hulls = is_globally_hyperbolic(g, k_max, opts);
  rep.hulls_stable = hulls.verdict;
  if (!hulls.verdict) {
    rep.leak_window = hulls.leak_window;
    rep.leak_site = hulls.leak_site;
    return rep;
  }
  rep.rung = CausalRung::globally_hyperbolic;
  return rep;
}

PreorderedSpace export_finite_space(const ConeGrid& g, const GridWindow& w) {
  require(w.t0 >= 0 && w.t1 < g.time_extent() && w.x0 >= 0 && w.x1 < g.space_extent() &&
              w.t0 <= w.t1 && w.x0 <= w.x1,
          Err::WindowOutOfRange, "window outside the grid");
  std::vector<int> site_of;
  for (int t = w.t0; t <= w.t1; ++t)
    for (int x = w.x0; x <= w.x1; ++x)
      if (g.live(t, x)) site_of.push_back(g.id(t, x));
  int n = int(site_of.size());
  require(n >= 1, Err::BadArguments, "window has no live sites");

  Relation ord(n);
  for (int i = 0; i < n; ++i) {
    Bits row = j_plus_row(g, site_of[i]);
    ord.add(i, i);
    for (int j = 0; j < n; ++j)
      if (row.test(site_of[j])) ord.add(i, j);
  }
  // Restriction of a transitive relation is transitive; re-close anyway so
  // the space constructor's invariant never trips.
  ord = ord.transitive_closure();
  return PreorderedSpace(FiniteTopology::discrete(n), std::move(ord));
}

std::vector<std::string> export_point_names(const ConeGrid& g, const GridWindow& w) {
  std::vector<std::string> names;
  for (int t = w.t0; t <= w.t1; ++t)
    for (int x = w.x0; x <= w.x1; ++x)
      if (g.live(t, x)) names.push_back(std::to_string(t) + "," + std::to_string(x));
  return names;
}

}  // namespace preord
