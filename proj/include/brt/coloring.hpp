#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brt/errors.hpp"

namespace brt {

// Symmetric 2-coloring of the unordered pairs over [0, N). Stored once per
// pair with x < y; values are 0 or 1.
class PairColoring {
 public:
  PairColoring() = default;

  explicit PairColoring(int universe_size)
      : n_(universe_size), colors_(pair_count(universe_size), 0) {
    if (universe_size < 0) throw InputError("universe size must be >= 0");
  }

  template <typename Fn>
  static PairColoring from_function(int universe_size, Fn&& color_of) {
    PairColoring f(universe_size);
    for (int y = 1; y < universe_size; ++y)
      for (int x = 0; x < y; ++x) f.colors_[index(x, y)] = color_of(x, y) ? 1 : 0;
    return f;
  }

  int universe_size() const { return n_; }

  int color(int x, int y) const {
    check_pair(x, y);
    if (x > y) std::swap(x, y);
    return colors_[index(x, y)];
  }

  void set(int x, int y, int c) {
    check_pair(x, y);
    if (c != 0 && c != 1) throw InputError("pair color must be 0 or 1");
    if (x > y) std::swap(x, y);
    colors_[index(x, y)] = static_cast<uint8_t>(c);
  }

  bool operator==(const PairColoring& other) const = default;

  static std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  }

 private:
  static std::size_t index(int x, int y) {  // requires x < y
    return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
  }

  void check_pair(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_)
      throw InputError("pair element out of universe [0, " + std::to_string(n_) + ")");
    if (x == y) throw InputError("pair requires two distinct elements");
  }

  int n_ = 0;
  std::vector<uint8_t> colors_;
};

// True iff every pair inside S has color c. Sets of size <= 1 are
// homogeneous for both colors (no pairs to test).
inline bool is_homogeneous(const PairColoring& f, std::span<const int> s, int color) {
  for (int x : s)
    if (x < 0 || x >= f.universe_size())
      throw InputError("set element " + std::to_string(x) + " out of universe");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      if (f.color(s[i], s[j]) != color) return false;
    }
  return true;
}

inline bool is_homogeneous(const PairColoring& f, const std::vector<int>& s, int color) {
  return is_homogeneous(f, std::span<const int>(s), color);
}

struct TripleWitness {
  int x, y, z;
};

// Transitivity for one color: x < y < z with f(x,y) = f(y,z) = c forces
// f(x,z) = c. Returns a violating triple when there is one.
inline std::optional<TripleWitness> find_transitivity_violation(const PairColoring& f, int color) {
  const int n = f.universe_size();
  const int words = (n + 63) / 64;
  // succ[x] = bitset of y > x with f(x,y) = color
  std::vector<uint64_t> succ(static_cast<std::size_t>(n) * words, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (f.color(x, y) == color)
        succ[static_cast<std::size_t>(x) * words + y / 64] |= uint64_t{1} << (y % 64);

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (f.color(x, y) != color) continue;
      const uint64_t* sx = &succ[static_cast<std::size_t>(x) * words];
      const uint64_t* sy = &succ[static_cast<std::size_t>(y) * words];
      for (int w = 0; w < words; ++w) {
        uint64_t missing = sy[w] & ~sx[w];
        if (missing) {
          int z = w * 64 + std::countr_zero(missing);
          return TripleWitness{x, y, z};
        }
      }
    }
  return std::nullopt;
}

inline bool is_transitive(const PairColoring& f, int color) {
  return !find_transitivity_violation(f, color).has_value();
}

// Pigeonhole reduction: f(x,y) = 0 iff class_of[x] == class_of[y]. No
// 1-homogeneous set can exceed the class count, and 0-homogeneous sets are
// exactly the single-class sets.
inline PairColoring pigeonhole_coloring(const std::vector<int>& class_of, int num_classes) {
  if (num_classes < 1) throw InputError("pigeonhole coloring needs at least one class");
  for (int c : class_of)
    if (c < 0 || c >= num_classes) throw InputError("class index out of range");
  return PairColoring::from_function(static_cast<int>(class_of.size()), [&](int x, int y) {
    return class_of[x] != class_of[y];
  });
}

// Finite-horizon stability data: how often each element's color against
// larger elements flips, and its color at the horizon. Elements with no
// larger partner count as limit color 0.
struct StabilityProfile {
  std::vector<int> flip_count;
  std::vector<int> limit_color;
  std::vector<int> limit_zero_set;  // ascending
};

inline StabilityProfile stability_profile(const PairColoring& f) {
  const int n = f.universe_size();
  if (n < 1) throw InputError("stability profile needs a nonempty universe");
  StabilityProfile p;
  p.flip_count.assign(n, 0);
  p.limit_color.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y + 1 < n; ++y)
      if (f.color(x, y) != f.color(x, y + 1)) ++p.flip_count[x];
    p.limit_color[x] = (x == n - 1) ? 0 : f.color(x, n - 1);
    if (p.limit_color[x] == 0) p.limit_zero_set.push_back(x);
  }
  return p;
}

}  // namespace brt
