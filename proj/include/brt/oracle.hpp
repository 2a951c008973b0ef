#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/partition.hpp"
#include "brt/poset.hpp"

namespace brt::oracle {

// Conservative defaults; exceeding a limit raises ResourceError, never a
// silently truncated answer.
struct Limits {
  int clique_universe = 64;        // max_homogeneous, width, height, min_chain_cover
  int subsequence_universe = 16;   // max_transitive_subsequence
  long long ramsey_budget = 1ll << 22;  // colorings enumerated by ramsey_certify
};

struct WitnessedMax {
  int size = 0;
  std::vector<int> witness;  // ascending, certified by the caller's predicate
};

namespace detail {

// Row bitsets over a dynamic universe.
class BitGraph {
 public:
  BitGraph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

  void add_edge(int x, int y) {
    adj_[static_cast<std::size_t>(x) * words_ + y / 64] |= uint64_t{1} << (y % 64);
    adj_[static_cast<std::size_t>(y) * words_ + x / 64] |= uint64_t{1} << (x % 64);
  }

  const uint64_t* row(int x) const { return &adj_[static_cast<std::size_t>(x) * words_]; }
  int size() const { return n_; }
  int words() const { return words_; }

 private:
  int n_;
  int words_;
  std::vector<uint64_t> adj_;
};

using Bits = std::vector<uint64_t>;

inline int popcount(const Bits& b) {
  int c = 0;
  for (uint64_t w : b) c += std::popcount(w);
  return c;
}

inline void for_each_bit(const Bits& b, auto&& fn) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    uint64_t word = b[w];
    while (word) {
      fn(static_cast<int>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

inline int first_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return static_cast<int>(w * 64 + std::countr_zero(b[w]));
  return -1;
}

// Branch and bound maximum clique with a greedy coloring bound, vertices
// scanned in ascending order. When stop_at is set the search exits as soon
// as a clique of that size is known.
class CliqueSearch {
 public:
  CliqueSearch(const BitGraph& g, int stop_at = -1) : g_(g), stop_at_(stop_at) {}

  int run(const Bits& candidates, int floor_size) {
    best_ = floor_size;
    expand(candidates, 0);
    return best_;
  }

 private:
  void expand(const Bits& candidates, int depth) {
    if (stop_at_ >= 0 && best_ >= stop_at_) return;
    // Greedy coloring of the candidate set; vertices listed color by color.
    std::vector<int> order, bound;
    color_sort(candidates, order, bound);
    Bits cand = candidates;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (depth + bound[idx] <= best_) return;
      int v = order[idx];
      Bits next(g_.words());
      const uint64_t* row = g_.row(v);
      for (int w = 0; w < g_.words(); ++w) next[w] = cand[w] & row[w];
      if (popcount(next) == 0) {
        best_ = std::max(best_, depth + 1);
        if (stop_at_ >= 0 && best_ >= stop_at_) return;
      } else {
        expand(next, depth + 1);
        if (stop_at_ >= 0 && best_ >= stop_at_) return;
      }
      cand[v / 64] &= ~(uint64_t{1} << (v % 64));
    }
  }

  void color_sort(const Bits& candidates, std::vector<int>& order, std::vector<int>& bound) {
    Bits uncolored = candidates;
    int color = 0;
    while (popcount(uncolored) > 0) {
      ++color;
      Bits colorable = uncolored;
      while (true) {
        int v = first_bit(colorable);
        if (v < 0) break;
        order.push_back(v);
        bound.push_back(color);
        uncolored[v / 64] &= ~(uint64_t{1} << (v % 64));
        const uint64_t* row = g_.row(v);
        for (int w = 0; w < g_.words(); ++w) colorable[w] &= ~row[w];
        colorable[v / 64] &= ~(uint64_t{1} << (v % 64));
      }
    }
  }

  const BitGraph& g_;
  int stop_at_;
  int best_ = 0;
};

// Maximum clique size plus the lexicographically least witness of that
// size, built by fixing ascending vertices whenever a completion exists.
inline WitnessedMax max_clique(const BitGraph& g) {
  Bits all(g.words(), 0);
  for (int v = 0; v < g.size(); ++v) all[v / 64] |= uint64_t{1} << (v % 64);
  if (g.size() == 0) return {};
  const int size = CliqueSearch(g).run(all, 0);

  WitnessedMax result;
  result.size = size;
  Bits cand = all;
  int need = size;
  for (int v = 0; v < g.size() && need > 0; ++v) {
    if (!(cand[v / 64] >> (v % 64) & 1)) continue;
    Bits next(g.words());
    const uint64_t* row = g.row(v);
    for (int w = 0; w < g.words(); ++w) next[w] = cand[w] & row[w];
    bool completes = need == 1 || CliqueSearch(g, need - 1).run(next, 0) >= need - 1;
    if (completes) {
      result.witness.push_back(v);
      cand = next;
      --need;
    }
  }
  if (need != 0) throw InternalError("clique witness reconstruction failed");
  return result;
}

}  // namespace detail

// Size and witness of the largest set homogeneous for `color`.
inline WitnessedMax max_homogeneous(const PairColoring& f, int color, const Limits& limits = {}) {
  const int n = f.universe_size();
  if (n > limits.clique_universe)
    throw ResourceError("universe " + std::to_string(n) + " exceeds the exhaustive limit " +
                        std::to_string(limits.clique_universe));
  if (n == 0) return {};
  detail::BitGraph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (f.color(x, y) == color) g.add_edge(x, y);
  return detail::max_clique(g);
}

// Largest chain of p (every pairwise comparable set is a chain).
inline WitnessedMax height(const PosetView& p, const Limits& limits = {}) {
  return max_homogeneous(coloring_from_poset(p), 0, limits);
}

// Largest antichain of p.
inline WitnessedMax width(const PosetView& p, const Limits& limits = {}) {
  return max_homogeneous(coloring_from_poset(p), 1, limits);
}

// Offline optimum chain partition via the split-bipartite matching
// reduction; class count equals width(p) by Dilworth duality (asserted).
inline ColorPartition min_chain_cover(const PosetView& p, const Limits& limits = {}) {
  const int n = p.universe_size();
  if (n > limits.clique_universe)
    throw ResourceError("universe " + std::to_string(n) + " exceeds the exhaustive limit " +
                        std::to_string(limits.clique_universe));

  // match_right[y] = x matched to y through an edge x <_P y.
  std::vector<int> match_right(n, -1), match_left(n, -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, int x) -> bool {
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y) || visited[y]) continue;
      visited[y] = 1;
      if (match_right[y] < 0 || self(self, match_right[y])) {
        match_right[y] = x;
        match_left[x] = y;
        return true;
      }
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    visited.assign(n, 0);
    augment(augment, x);
  }

  // Chains are the matched paths; label each by its minimal element, then
  // compact labels in ascending order.
  std::vector<int> head(n);
  std::vector<char> is_successor(n, 0);
  for (int y = 0; y < n; ++y)
    if (match_right[y] >= 0) is_successor[y] = 1;
  for (int x = 0; x < n; ++x) {
    if (is_successor[x]) continue;
    for (int v = x; v >= 0; v = match_left[v]) head[v] = x;
  }
  std::vector<int> keys(head.begin(), head.end());
  ColorPartition cover = compact_partition(keys, std::nullopt);

  WitnessedMax w = width(p, limits);
  if (n > 0 && cover.num_classes != w.size)
    throw InternalError("chain cover size " + std::to_string(cover.num_classes) +
                        " does not match width " + std::to_string(w.size));
  cover.declared_bound = w.size;
  return cover;
}

// True iff every coloring of the pairs over [0, n) with `colors` colors has
// a monochromatic set of size m. Exhaustive over colors^C(n,2) colorings.
inline bool ramsey_certify(int colors, int m, int n, const Limits& limits = {}) {
  if (colors < 1 || m < 0 || n < 0) throw InputError("ramsey_certify needs colors >= 1, m,n >= 0");
  if (n < m) return false;  // no m-subset exists at all
  if (m <= 1) return true;  // empty sets and singletons are monochromatic vacuously
  const int pairs = static_cast<int>(PairColoring::pair_count(n));

  long long total = 1;
  for (int i = 0; i < pairs; ++i) {
    if (total > limits.ramsey_budget / colors)
      throw ResourceError("ramsey_certify budget exceeded: " + std::to_string(colors) + "^" +
                          std::to_string(pairs) + " colorings");
    total *= colors;
  }

  std::vector<int> pair_color(pairs, 0);
  auto pair_index = [](int x, int y) { return y * (y - 1) / 2 + x; };

  // All m-subsets of [0, n), precomputed.
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(m);
  auto gen = [&](auto&& self, int start, int depth) -> void {
    if (depth == m) {
      subsets.push_back(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  gen(gen, 0, 0);

  while (true) {
    bool has_mono = false;
    for (const auto& s : subsets) {
      int c = pair_color[pair_index(s[0], s[1])];
      bool mono = true;
      for (std::size_t i = 0; i < s.size() && mono; ++i)
        for (std::size_t j = i + 1; j < s.size() && mono; ++j)
          if (pair_color[pair_index(s[i], s[j])] != c) mono = false;
      if (mono) {
        has_mono = true;
        break;
      }
    }
    if (!has_mono) return false;

    int digit = 0;  // next coloring in mixed radix
    while (digit < pairs && ++pair_color[digit] == colors) pair_color[digit++] = 0;
    if (digit == pairs) return true;
  }
}

// Largest index-increasing subsequence whose reindexed coloring is
// transitive for both colors. Exhaustive over subsets, sizes descending;
// the first hit in combination order is the witness.
inline WitnessedMax max_transitive_subsequence(const PairColoring& f, const Limits& limits = {}) {
  const int n = f.universe_size();
  if (n > limits.subsequence_universe)
    throw ResourceError("universe " + std::to_string(n) + " exceeds the subsequence limit " +
                        std::to_string(limits.subsequence_universe));
  if (n == 0) return {};

  auto transitive_both = [&](const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (std::size_t k = j + 1; k < s.size(); ++k) {
          int a = f.color(s[i], s[j]), b = f.color(s[j], s[k]);
          if (a == b && f.color(s[i], s[k]) != a) return false;
        }
    return true;
  };

  for (int size = n; size >= 1; --size) {
    std::vector<int> pick(size);
    WitnessedMax found;
    auto search = [&](auto&& self, int start, int depth) -> bool {
      if (depth == size) {
        if (!transitive_both(pick)) return false;
        found = {size, pick};
        return true;
      }
      for (int v = start; v < n; ++v) {
        pick[depth] = v;
        if (self(self, v + 1, depth + 1)) return true;
      }
      return false;
    };
    if (search(search, 0, 0)) return found;
  }
  return {};
}

}  // namespace brt::oracle
