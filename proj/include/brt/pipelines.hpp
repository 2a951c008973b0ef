#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/felsner.hpp"
#include "brt/mirsky.hpp"
#include "brt/partition.hpp"
#include "brt/poset.hpp"

namespace brt::pipelines {

// Greedy min-homogeneous subsequence: repeatedly take the least remaining
// element and keep the majority color class of its neighbors (ties go to
// color 0). The color of (x_i, x_j) with i < j depends only on i, so the
// subsequence is transitive for both colors. Length >= floor(log2 N) + 1.
inline std::vector<int> min_homogeneous_subsequence(const PairColoring& f) {
  if (f.universe_size() < 1) throw InputError("subsequence extraction needs a nonempty universe");
  std::vector<int> remaining(f.universe_size());
  for (int x = 0; x < f.universe_size(); ++x) remaining[x] = x;

  std::vector<int> sequence;
  while (!remaining.empty()) {
    int head = remaining.front();
    sequence.push_back(head);
    std::vector<int> zeros, ones;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      (f.color(head, remaining[i]) == 0 ? zeros : ones).push_back(remaining[i]);
    remaining = zeros.size() >= ones.size() ? std::move(zeros) : std::move(ones);
  }
  return sequence;
}

// Transport of the coloring along an index-increasing subsequence:
// h(a, b) = f(X[a], X[b]).
inline PairColoring reindex(const PairColoring& f, const std::vector<int>& subsequence) {
  for (std::size_t i = 0; i < subsequence.size(); ++i) {
    if (subsequence[i] < 0 || subsequence[i] >= f.universe_size())
      throw InputError("subsequence element out of universe");
    if (i > 0 && subsequence[i] <= subsequence[i - 1])
      throw InputError("subsequence must be strictly increasing");
  }
  return PairColoring::from_function(static_cast<int>(subsequence.size()), [&](int a, int b) {
    return f.color(subsequence[a], subsequence[b]) == 1;
  });
}

namespace detail {

// Pigeonhole step: largest class, smallest index on ties.
inline std::vector<int> largest_class(const ColorPartition& g) {
  auto classes = g.classes();
  int best = 0;
  for (int c = 1; c < g.num_classes; ++c)
    if (classes[c].size() > classes[best].size()) best = c;
  return g.num_classes > 0 ? classes[best] : std::vector<int>{};
}

}  // namespace detail

// Subsequence reduction followed by the on-line chain partition: extract a
// both-colors-transitive subsequence, chain-partition it, and pull the
// largest class back. Output is 0-homogeneous in f with at least
// ceil((floor(log2 N) + 1) / (k(k+1)/2)) elements when no 1-homogeneous set
// of size k exists.
inline Fallible<std::vector<int>> solve_em(const PairColoring& f, int k) {
  std::vector<int> subsequence = min_homogeneous_subsequence(f);
  PairColoring transported = reindex(f, subsequence);
  auto partitioned = felsner::run(transported, k);
  if (!partitioned.ok()) {
    // Pull the witness back through the subsequence.
    HypothesisViolation violation = partitioned.violation();
    for (int& w : violation.witness) w = subsequence[w];
    return violation;
  }
  std::vector<int> chosen = detail::largest_class(partitioned.value().partition);
  for (int& w : chosen) w = subsequence[w];
  return chosen;
}

// Single-color-transitive route: chain-partition directly when f is
// transitive for 0; antichain-partition the 1-colored order when f is
// transitive for 1 (incomparable pairs are 0-colored, and the order's
// height stays below k, so at most (k-1)^2 classes are used).
inline Fallible<std::vector<int>> solve_hem(const PairColoring& f, int k, int color) {
  if (color != 0 && color != 1) throw InputError("transitive color must be 0 or 1");
  if (color == 0) {
    auto partitioned = felsner::run(f, k);
    if (!partitioned.ok()) return partitioned.violation();
    return detail::largest_class(partitioned.value().partition);
  }
  PosetView order = poset_from_coloring(f, 1);  // rejects non-transitive input
  ColorPartition g = mirsky::weak_partition(order);
  return detail::largest_class(g);
}

}  // namespace brt::pipelines
