#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "brt/errors.hpp"
#include "brt/partition.hpp"
#include "brt/poset.hpp"

namespace brt::mirsky {

// rising_ranks[x] = s where the longest sequence ending at x that is both
// order-increasing and index-increasing has s+1 elements. Reads only the
// prefix below x, so ranks are stable under universe extension.
inline std::vector<int> rising_ranks(const PosetView& p) {
  const int n = p.universe_size();
  std::vector<int> rank(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (p.less(y, x)) rank[x] = std::max(rank[x], rank[y] + 1);
  return rank;
}

// Same with order-decreasing sequences: the predecessor sits above x.
inline std::vector<int> falling_ranks(const PosetView& p) {
  const int n = p.universe_size();
  std::vector<int> rank(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (p.less(x, y)) rank[x] = std::max(rank[x], rank[y] + 1);
  return rank;
}

// Antichain partition by the pair (rising, falling) rank: comparable
// elements differ in one coordinate, so every class is an antichain. Uses
// at most height^2 classes; indices are lexicographic on the rank pair,
// compacted to the used set.
inline ColorPartition weak_partition(const PosetView& p) {
  std::vector<int> rising = rising_ranks(p);
  std::vector<int> falling = falling_ranks(p);
  std::vector<std::pair<int, int>> keys(p.universe_size());
  int rise_bound = 0, fall_bound = 0;
  for (int x = 0; x < p.universe_size(); ++x) {
    keys[x] = {rising[x], falling[x]};
    rise_bound = std::max(rise_bound, rising[x] + 1);
    fall_bound = std::max(fall_bound, falling[x] + 1);
  }
  ColorPartition g = compact_partition(keys, p.universe_size() > 0
                                                 ? std::optional<int>(rise_bound * fall_bound)
                                                 : std::nullopt);
  g.check_well_formed();
  return g;
}

// Offline exact partition: class of x is the size of the largest chain with
// x as maximal element, minus one. The DP runs over a linear extension,
// where every chain ending at x is extension-increasing, so the longest one
// is found exactly and the class count equals the height.
inline ColorPartition exact_partition(const PosetView& p) {
  const int n = p.universe_size();

  // Kahn's algorithm, smallest ready index first.
  std::vector<int> order;
  std::vector<int> pending(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.less(y, x)) ++pending[x];
  std::vector<char> placed(n, 0);
  for (int round = 0; round < n; ++round) {
    int next = -1;
    for (int x = 0; x < n; ++x)
      if (!placed[x] && pending[x] == 0) {
        next = x;
        break;
      }
    if (next < 0) throw InternalError("poset has no linear extension");
    placed[next] = 1;
    order.push_back(next);
    for (int y = 0; y < n; ++y)
      if (p.less(next, y)) --pending[y];
  }

  std::vector<int> rank(n, 0);
  for (int x : order)
    for (int y : order) {
      if (y == x) break;
      if (p.less(y, x)) rank[x] = std::max(rank[x], rank[y] + 1);
    }

  ColorPartition g = compact_partition(rank, std::nullopt);
  g.declared_bound = g.num_classes;  // equals the height; asserted in tests
  g.check_well_formed();
  return g;
}

}  // namespace brt::mirsky
