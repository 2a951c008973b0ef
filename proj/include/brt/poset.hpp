#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"

namespace brt {

// Finite strict partial order on [0, N), stored as a full relation matrix.
// Construction validates irreflexivity, antisymmetry and transitivity.
class PosetView {
 public:
  PosetView() = default;

  static PosetView from_matrix(int universe_size, std::vector<uint8_t> less) {
    PosetView p(universe_size, std::move(less));
    p.validate();
    return p;
  }

  static PosetView from_relation(int universe_size, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<uint8_t> less(static_cast<std::size_t>(universe_size) * universe_size, 0);
    for (auto [x, y] : pairs) {
      if (x < 0 || y < 0 || x >= universe_size || y >= universe_size)
        throw InputError("relation pair out of universe");
      less[static_cast<std::size_t>(x) * universe_size + y] = 1;
    }
    return from_matrix(universe_size, std::move(less));
  }

  int universe_size() const { return n_; }

  bool less(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw InputError("poset element out of universe");
    return less_[static_cast<std::size_t>(x) * n_ + y] != 0;
  }

  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

  bool operator==(const PosetView& other) const = default;

 private:
  PosetView(int n, std::vector<uint8_t> less) : n_(n), less_(std::move(less)) {
    if (n < 0) throw InputError("universe size must be >= 0");
    if (less_.size() != static_cast<std::size_t>(n) * n) throw InputError("relation matrix size mismatch");
  }

  void validate() const {
    for (int x = 0; x < n_; ++x)
      if (raw(x, x)) throw InputError("order is reflexive at " + std::to_string(x));
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (raw(x, y) && raw(y, x))
          throw InputError("order violates antisymmetry on (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
    // Transitivity via bit rows: succ(y) must be contained in succ(x) whenever x < y.
    const int words = (n_ + 63) / 64;
    std::vector<uint64_t> succ(static_cast<std::size_t>(n_) * words, 0);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (raw(x, y)) succ[static_cast<std::size_t>(x) * words + y / 64] |= uint64_t{1} << (y % 64);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (!raw(x, y)) continue;
        for (int w = 0; w < words; ++w) {
          uint64_t missing = succ[static_cast<std::size_t>(y) * words + w] &
                             ~succ[static_cast<std::size_t>(x) * words + w];
          if (missing) {
            int z = w * 64 + std::countr_zero(missing);
            throw InputError("order is not transitive: " + std::to_string(x) + " < " +
                             std::to_string(y) + " < " + std::to_string(z) + " but not " +
                             std::to_string(x) + " < " + std::to_string(z));
          }
        }
      }
  }

  bool raw(int x, int y) const { return less_[static_cast<std::size_t>(x) * n_ + y] != 0; }

  int n_ = 0;
  std::vector<uint8_t> less_;
};

// x <_P y iff x < y and f(x,y) = c. Requires f transitive for c; the
// violating triple is named otherwise.
inline PosetView poset_from_coloring(const PairColoring& f, int color) {
  if (auto t = find_transitivity_violation(f, color)) {
    throw InputError("coloring is not transitive for color " + std::to_string(color) +
                     ": witness triple (" + std::to_string(t->x) + ", " + std::to_string(t->y) +
                     ", " + std::to_string(t->z) + ")");
  }
  const int n = f.universe_size();
  std::vector<uint8_t> less(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (f.color(x, y) == color) less[static_cast<std::size_t>(x) * n + y] = 1;
  return PosetView::from_matrix(n, std::move(less));
}

// Comparable pairs get color 0, incomparable pairs color 1. Round-trips
// with poset_from_coloring(f, 0) when f is transitive for 0.
inline PairColoring coloring_from_poset(const PosetView& p) {
  return PairColoring::from_function(p.universe_size(),
                                     [&](int x, int y) { return !p.comparable(x, y); });
}

}  // namespace brt
