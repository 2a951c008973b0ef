#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "brt/adversary.hpp"
#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/poset.hpp"
#include "brt/streams.hpp"

namespace brt::gen {

// All generators draw from splitmix64 (Steele, Lea, Flood 2014), fixed by
// name so that runs reproduce across platforms and languages. Never the
// platform default engine.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n >= 1. Modulo reduction, documented as part of the
  // fixed generator contract.
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  uint64_t state_;
};

// Each pair colored 1 independently with probability p.
inline PairColoring random_coloring(int n, double p, uint64_t seed) {
  if (p < 0 || p > 1) throw InputError("probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  PairColoring f(n);
  for (int y = 1; y < n; ++y)
    for (int x = 0; x < y; ++x)
      if (rng.chance(p)) f.set(x, y, 1);
  return f;
}

// f(x,y) = 1 iff x and y share a block of `width` consecutive elements.
inline PairColoring blocks_coloring(int n, int width) {
  if (width < 1) throw InputError("block width must be >= 1");
  return PairColoring::from_function(n, [&](int x, int y) { return x / width == y / width; });
}

// Random class assignment into `colors` classes followed by the pigeonhole
// reduction; `balanced` uses x mod colors instead of random classes.
inline PairColoring pigeonhole_instance(int n, int colors, uint64_t seed, bool balanced = false) {
  if (colors < 1) throw InputError("pigeonhole instance needs >= 1 colors");
  SplitMix64 rng(seed);
  std::vector<int> class_of(n);
  for (int x = 0; x < n; ++x) class_of[x] = balanced ? x % colors : rng.below(colors);
  return pigeonhole_coloring(class_of, colors);
}

namespace detail {

// Transitive closure of a relation aligned with the natural order
// (x < y whenever x <_P y), by a reverse sweep.
inline void close_aligned(int n, std::vector<uint8_t>& less) {
  for (int x = n - 1; x >= 0; --x)
    for (int y = x + 1; y < n; ++y) {
      if (!less[static_cast<std::size_t>(x) * n + y]) continue;
      for (int z = y + 1; z < n; ++z)
        if (less[static_cast<std::size_t>(y) * n + z]) less[static_cast<std::size_t>(x) * n + z] = 1;
    }
}

}  // namespace detail

// Random order aligned with the natural order: each candidate pair x < y
// is related with probability p, then the relation is closed transitively.
inline PosetView random_poset(int n, double p, uint64_t seed) {
  if (p < 0 || p > 1) throw InputError("probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<uint8_t> less(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rng.chance(p)) less[static_cast<std::size_t>(x) * n + y] = 1;
  detail::close_aligned(n, less);
  return PosetView::from_matrix(n, std::move(less));
}

// Aligned order of width at most `width`: elements are spread over `width`
// chains, with extra cross-chain comparabilities added with probability p
// and closed transitively. Any antichain meets each chain at most once.
inline PosetView width_bounded_poset(int n, int width, double p, uint64_t seed) {
  if (width < 1) throw InputError("width bound must be >= 1");
  SplitMix64 rng(seed);
  std::vector<int> chain_of(n);
  for (int x = 0; x < n; ++x) chain_of[x] = rng.below(width);
  std::vector<uint8_t> less(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (chain_of[x] == chain_of[y] || rng.chance(p)) less[static_cast<std::size_t>(x) * n + y] = 1;
  detail::close_aligned(n, less);
  return PosetView::from_matrix(n, std::move(less));
}

// Transitive-for-1 coloring whose 1-homogeneous sets have at most
// `max_fiber` elements: 1-colored pairs are exactly the same-fiber pairs of
// a random assignment with fiber sizes capped at max_fiber.
inline PairColoring bounded_fiber_coloring(int n, int max_fiber, uint64_t seed) {
  if (max_fiber < 1) throw InputError("fiber cap must be >= 1");
  SplitMix64 rng(seed);
  const int fibers = (n + max_fiber - 1) / max_fiber;
  std::vector<int> fiber_of(n);
  std::vector<int> load(fibers, 0);
  for (int x = 0; x < n; ++x) {
    int f = rng.below(fibers);
    while (load[f] >= max_fiber) f = (f + 1) % fibers;
    fiber_of[x] = f;
    ++load[f];
  }
  return PairColoring::from_function(n, [&](int x, int y) { return fiber_of[x] == fiber_of[y]; });
}

// Random stream family: each stream enumerates each element < horizon with
// probability `density`, at a random stage >= the element's value.
inline StreamFamily random_streams(int num_streams, int horizon, double density, uint64_t seed) {
  if (density < 0 || density > 1) throw InputError("density must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<StreamEvent> events;
  for (int e = 0; e < num_streams; ++e)
    for (int x = 0; x < horizon; ++x)
      if (rng.chance(density)) {
        int stage = x + rng.below(horizon - x);
        events.push_back({e, x, stage});
      }
  return StreamFamily(num_streams, horizon, std::move(events));
}

// Valid random schedule with `changes` guess bumps per position, spread
// over the horizon. Values stay monotone in the position and the stage and
// dominated by the stage.
inline adversary::ApproximationSchedule random_schedule(int cut_bound, int horizon, int changes,
                                                        int max_value, uint64_t seed) {
  if (cut_bound < 0 || horizon < 1) throw InputError("schedule needs horizon >= 1");
  SplitMix64 rng(seed);
  adversary::ApproximationSchedule sched;
  sched.cut_bound = cut_bound;
  sched.horizon = horizon;
  sched.value.assign(horizon, std::vector<int>(cut_bound, 0));

  // Raw per-position step functions, non-decreasing in the stage.
  std::vector<std::vector<int>> raw(cut_bound, std::vector<int>(horizon, 0));
  for (int i = 0; i < cut_bound; ++i)
    for (int step = 0; step < changes; ++step) {
      int at = 1 + rng.below(horizon > 1 ? horizon - 1 : 1);
      int bump = 1 + rng.below(std::max(1, max_value));
      for (int s = at; s < horizon; ++s) raw[i][s] += bump;
    }

  // value[s][i] = max over j <= i of min(raw[j][s], cap(s)): a max of
  // stage-monotone functions capped by the stage stays stage-monotone, is
  // monotone in the position, and is dominated by the stage.
  for (int s = 0; s < horizon; ++s) {
    const int cap = s > 0 ? s - 1 : 0;
    for (int i = 0; i < cut_bound; ++i) {
      int v = std::min(raw[i][s], cap);
      if (i > 0) v = std::max(v, sched.value[s][i - 1]);
      sched.value[s][i] = v;
    }
  }
  sched.validate();
  return sched;
}

}  // namespace brt::gen
