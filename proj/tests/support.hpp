#pragma once

// Shared helpers for the test suites. The brute-force references here stay
// independent of the library paths they check.

#include <cstdint>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/poset.hpp"

namespace testsupport {

// Reference homogeneity check: plain double loop, no library calls.
inline bool ref_homogeneous(const brt::PairColoring& f, const std::vector<int>& s, int color) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (f.color(s[i], s[j]) != color) return false;
  return true;
}

// Reference maximum homogeneous set size by full subset enumeration.
inline int ref_max_homogeneous_size(const brt::PairColoring& f, int color) {
  const int n = f.universe_size();
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
      if (mask & (uint32_t{1} << x)) s.push_back(x);
    if (static_cast<int>(s.size()) > best && ref_homogeneous(f, s, color))
      best = static_cast<int>(s.size());
  }
  return best;
}

// Coloring from an explicit list of 1-colored pairs.
inline brt::PairColoring coloring_with_ones(int n, const std::vector<std::pair<int, int>>& ones) {
  brt::PairColoring f(n);
  for (auto [x, y] : ones) f.set(x, y, 1);
  return f;
}

// f(x,y) = 1 iff x and y have the same parity.
inline brt::PairColoring parity_coloring(int n) {
  return brt::PairColoring::from_function(n, [](int x, int y) { return x % 2 == y % 2; });
}

// Decode `bits` as an aligned strict-order candidate on [0, n): bit p of the
// pair (x, y), x < y, in the canonical order. Returns false if the decoded
// relation is not transitive.
inline bool decode_aligned_relation(int n, uint32_t bits, std::vector<uint8_t>* out) {
  std::vector<uint8_t> succ(n, 0);  // bitmask rows, n <= 8
  int p = 0;
  for (int y = 1; y < n; ++y)
    for (int x = 0; x < y; ++x, ++p)
      if (bits & (uint32_t{1} << p)) succ[x] |= uint8_t{1} << y;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((succ[x] >> y) & 1)
        if ((succ[y] & ~succ[x]) != 0) return false;
  out->assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((succ[x] >> y) & 1) (*out)[static_cast<std::size_t>(x) * n + y] = 1;
  return true;
}

}  // namespace testsupport
