#include "densedel/bruteforce.h"

#include <bit>
#include <cstdint>

#include "densedel/error.h"
#include "densedel/size_cap.h"

namespace densedel {

namespace {

using Mask = std::uint64_t;

void require_size(int n, int default_cap, const char* what) {
  const int limit = std::min(size_cap(default_cap), kAbsoluteSizeCap);
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + ": " + std::to_string(n) +
                                          " elements exceeds cap " + std::to_string(limit));
  }
}

VertexSet mask_to_set(Mask mask) {
  VertexSet out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// e[S] for every S: e[S] = e[S - v] + loops(v) + sum_{w in S - v} mult(v, w), v = lowest bit.
std::vector<std::int32_t> edge_count_table(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::int32_t>> mult(n, std::vector<std::int32_t>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    if (!e.is_loop()) ++mult[e.v][e.u];
  }
  const Mask count = Mask{1} << n;
  std::vector<std::int32_t> e(count, 0);
  for (Mask s = 1; s < count; ++s) {
    const int v = std::countr_zero(s);
    const Mask rest = s & (s - 1);
    std::int32_t add = mult[v][v];
    for (Mask r = rest; r; r &= r - 1) add += mult[v][std::countr_zero(r)];
    e[s] = e[rest] + add;
  }
  return e;
}

std::vector<Rational> value_table(const SupermodOracle& f) {
  const Mask count = Mask{1} << f.ground_size();
  std::vector<Rational> vals(count);
  for (Mask m = 0; m < count; ++m) vals[m] = f.eval(subset_from_mask(f.ground(), m));
  return vals;
}

// below[T] = OR of bad[S] over S subset of T.
std::vector<std::uint8_t> subset_or(std::vector<std::uint8_t> bad, int n) {
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask t = 0; t < bad.size(); ++t) {
      if ((t & bit) && bad[t ^ bit]) bad[t] = 1;
    }
  }
  return bad;
}

void sort_sets(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end()); }

BruteDensity density_from(const std::vector<Rational>& vals,
                          const std::function<VertexSet(Mask)>& to_set) {
  BruteDensity out;
  out.lambda = 0;
  std::vector<Mask> best;
  for (Mask m = 1; m < vals.size(); ++m) {
    const Rational d = vals[m] / Rational(std::popcount(m));
    if (best.empty() || d > out.lambda) {
      out.lambda = d;
      best = {m};
    } else if (d == out.lambda) {
      best.push_back(m);
    }
  }
  Mask all = 0;
  for (Mask m : best) {
    all |= m;
    out.maximizers.push_back(to_set(m));
  }
  sort_sets(out.maximizers);
  out.maximal = to_set(all);
  if (!best.empty() && vals[all] / Rational(std::popcount(all)) != out.lambda) {
    throw Error(ErrorCode::kInvalidOracle, "union of densest sets is not densest");
  }
  if (best.empty()) out.lambda = 0;
  return out;
}

// Shared by the graph and oracle deletion routines. `bad[T]` marks residual
// sets T (over an n-element ground) with some subset denser than rho.
BruteResult cheapest_feasible(const std::vector<std::uint8_t>& bad, int n,
                              const std::vector<Cost>& cost_by_index,
                              const std::function<VertexSet(Mask)>& to_set) {
  const std::vector<std::uint8_t> below = subset_or(bad, n);
  const Mask full = (Mask{1} << n) - 1;
  Mask finite = 0;
  for (int i = 0; i < n; ++i) {
    if (cost_by_index[i].is_finite()) finite |= Mask{1} << i;
  }
  BruteResult out;
  out.feasible = false;
  std::vector<Mask> best;
  // Every submask of `finite`, ascending.
  for (Mask x = 0;; x = (x - finite) & finite) {
    if (!below[full ^ x]) {
      Cost c = Cost::zero();
      for (Mask r = x; r; r &= r - 1) c += cost_by_index[std::countr_zero(r)];
      if (!out.feasible || c.value() < out.value.value()) {
        out.feasible = true;
        out.value = c;
        best = {x};
      } else if (c.value() == out.value.value()) {
        best.push_back(x);
      }
    }
    if (x == finite) break;
  }
  if (!out.feasible) {
    // Deleting everything is always feasible, so only infinite-cost solutions remain.
    out.value = Cost::infinite();
    return out;
  }
  for (Mask m : best) out.witnesses.push_back(to_set(m));
  sort_sets(out.witnesses);
  return out;
}

}  // namespace

BruteDensity brute_densest(const MultiGraph& g) {
  const int n = g.num_vertices();
  require_size(n, 16, "brute_densest");
  const std::vector<std::int32_t> e = edge_count_table(g);
  std::vector<Rational> vals(e.size());
  for (Mask m = 0; m < e.size(); ++m) vals[m] = Rational(e[m]);
  return density_from(vals, mask_to_set);
}

BruteDensity brute_density(const SupermodOracle& f) {
  require_size(f.ground_size(), 16, "brute_density");
  const VertexSet& ground = f.ground();
  return density_from(value_table(f), [&](Mask m) { return subset_from_mask(ground, m); });
}

BruteExcess brute_excess(const SupermodOracle& f, const Rational& rho) {
  require_size(f.ground_size(), 16, "brute_excess");
  const std::vector<Rational> vals = value_table(f);
  BruteExcess out;
  std::vector<Mask> best;
  for (Mask m = 0; m < vals.size(); ++m) {
    const Rational x = vals[m] - rho * Rational(std::popcount(m));
    if (best.empty() || x > out.value) {
      out.value = x;
      best = {m};
    } else if (x == out.value) {
      best.push_back(m);
    }
  }
  for (Mask m : best) out.maximizers.push_back(subset_from_mask(f.ground(), m));
  sort_sets(out.maximizers);
  return out;
}

BruteResult brute_opt_deletion(const MultiGraph& g, const Rational& rho) {
  const int n = g.num_vertices();
  require_size(n, 22, "brute_opt_deletion");
  int finite = 0;
  for (const Cost& c : g.costs()) finite += c.is_finite() ? 1 : 0;
  require_size(finite, 16, "brute_opt_deletion (finite-cost vertices)");
  const std::int64_t p = rho.numerator_i64();
  const std::int64_t q = rho.denominator_i64();
  const std::vector<std::int32_t> e = edge_count_table(g);
  std::vector<std::uint8_t> bad(e.size(), 0);
  for (Mask m = 1; m < e.size(); ++m) bad[m] = q * e[m] > p * std::popcount(m);
  return cheapest_feasible(bad, n, g.costs(), mask_to_set);
}

BruteResult brute_opt_deletion(const SupermodOracle& f, const std::vector<Cost>& costs,
                               const Rational& rho) {
  const int n = f.ground_size();
  require_size(n, 8, "brute_opt_deletion");
  const VertexSet& ground = f.ground();
  std::vector<Cost> by_index;
  for (VertexId v : ground) {
    if (v < 0 || v >= static_cast<int>(costs.size())) {
      throw Error(ErrorCode::kInvalidCost, "no cost for element " + std::to_string(v));
    }
    by_index.push_back(costs[v]);
  }
  const std::vector<Rational> vals = value_table(f);
  std::vector<std::uint8_t> bad(vals.size(), 0);
  for (Mask m = 1; m < vals.size(); ++m) bad[m] = vals[m] > rho * Rational(std::popcount(m));
  return cheapest_feasible(bad, n, by_index, [&](Mask m) { return subset_from_mask(ground, m); });
}

std::vector<VertexSet> brute_feasible_sets(const SupermodOracle& f, const Rational& rho) {
  const int n = f.ground_size();
  require_size(n, 8, "brute_feasible_sets");
  const std::vector<Rational> vals = value_table(f);
  std::vector<std::uint8_t> bad(vals.size(), 0);
  for (Mask m = 1; m < vals.size(); ++m) bad[m] = vals[m] > rho * Rational(std::popcount(m));
  const std::vector<std::uint8_t> below = subset_or(bad, n);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<VertexSet> out;
  for (Mask x = 0; x <= full; ++x) {
    if (!below[full ^ x]) out.push_back(subset_from_mask(f.ground(), x));
  }
  sort_sets(out);
  return out;
}

BruteResult brute_set_cover(const SetCoverInstance& sc) {
  const int k = sc.num_sets();
  require_size(k, 16, "brute_set_cover");
  std::vector<Mask> covers(k, 0);
  for (int s = 0; s < k; ++s) {
    for (int e : sc.sets[s]) covers[s] |= Mask{1} << e;
  }
  if (sc.universe > 63) throw Error(ErrorCode::kTooLarge, "universe too large for enumeration");
  const Mask universe = sc.universe == 0 ? 0 : (Mask{1} << sc.universe) - 1;
  BruteResult out;
  out.feasible = false;
  bool any_cover = false;
  std::vector<Mask> best;
  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    Mask covered = 0;
    Cost c = Cost::zero();
    for (Mask r = m; r; r &= r - 1) {
      const int s = std::countr_zero(r);
      covered |= covers[s];
      c += sc.costs[s];
    }
    if (covered != universe) continue;
    any_cover = true;
    if (c.is_infinite()) continue;
    if (!out.feasible || c.value() < out.value.value()) {
      out.feasible = true;
      out.value = c;
      best = {m};
    } else if (c.value() == out.value.value()) {
      best.push_back(m);
    }
  }
  if (!any_cover) throw Error(ErrorCode::kUnsupportedInstance, "the sets do not cover the universe");
  if (!out.feasible) out.value = Cost::infinite();
  for (Mask m : best) out.witnesses.push_back(mask_to_set(m));
  sort_sets(out.witnesses);
  return out;
}

DenseDecomposition brute_decomposition(const SupermodOracle& f) {
  const int n = f.ground_size();
  require_size(n, 12, "brute_decomposition");
  const std::vector<Rational> vals = value_table(f);
  if (vals[0].sign() != 0) throw Error(ErrorCode::kInvalidOracle, "f(empty) != 0");
  const Mask full = (Mask{1} << n) - 1;
  DenseDecomposition out;
  Mask used = 0;
  while (used != full) {
    const Mask rest = full ^ used;
    Rational best;
    Mask maximal = 0;
    bool have = false;
    for (Mask x = rest; x; x = (x - 1) & rest) {
      const Rational d = (vals[used | x] - vals[used]) / Rational(std::popcount(x));
      if (!have || d > best) {
        best = d;
        maximal = x;
        have = true;
      } else if (d == best) {
        maximal |= x;
      }
    }
    if ((vals[used | maximal] - vals[used]) / Rational(std::popcount(maximal)) != best) {
      throw Error(ErrorCode::kInvalidOracle, "union of densest sets is not densest");
    }
    out.push_back({subset_from_mask(f.ground(), maximal), best});
    used |= maximal;
  }
  return out;
}

}  // namespace densedel
