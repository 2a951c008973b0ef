#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/partition.hpp"

namespace brt::felsner {

// One chain of the evolving library. Elements ascend; the partition class
// is fixed at the chain's birth and shared by every element placed into it.
struct Chain {
  std::vector<int> elements;
  int color = 0;

  int max() const { return elements.back(); }
  int min() const { return elements.front(); }

  bool operator==(const Chain&) const = default;
};

// Levels 1..k-1 of chain collections, evolved one element per stage.
// Invariants after every step:
//   (1) level i holds at most i chains
//   (2) the chains partition [0, stage)
//   (3) per level, the chain maxima are pairwise 1-colored
struct ChainLibrary {
  int k = 0;
  int stage = 0;
  int colors_used = 0;
  std::vector<std::vector<Chain>> levels;  // levels[i] is level i+1

  static ChainLibrary fresh(int k) {
    if (k < 1) throw InputError("felsner requires k >= 1");
    ChainLibrary lib;
    lib.k = k;
    lib.levels.assign(k - 1, {});
    return lib;
  }

  bool operator==(const ChainLibrary&) const = default;
};

struct StepRecord {
  int element;
  int level;          // 1-based
  int case_taken;     // 1 = extended a chain, 2 = opened a singleton chain
  std::vector<int> chain;  // the moved/created chain, after placement

  bool operator==(const StepRecord&) const = default;
};

using StepTrace = std::vector<StepRecord>;

// Guaranteed partition bound k(k+1)/2; the construction itself never opens
// more than k(k-1)/2 chains.
inline int color_bound(int k) {
  if (k < 1) throw InputError("color bound requires k >= 1");
  return k * (k + 1) / 2;
}

namespace detail {

inline void sort_level(std::vector<Chain>& level) {
  std::sort(level.begin(), level.end(),
            [](const Chain& a, const Chain& b) { return a.min() < b.min(); });
}

}  // namespace detail

// Places element state.stage. The searched index range is 1..k-1; when it
// is exhausted the level-(k-1) maxima together with the new element form a
// 1-homogeneous set of size k, returned as the violation witness.
inline Fallible<StepRecord> step(ChainLibrary& state, const PairColoring& f) {
  const int s = state.stage;
  if (s >= f.universe_size()) throw InputError("step beyond the coloring's universe");

  for (int level = 1; level <= state.k - 1; ++level) {
    auto& chains = state.levels[level - 1];
    // Case 1 candidate: extendable chain with the largest max.
    int pick = -1;
    for (int c = 0; c < static_cast<int>(chains.size()); ++c)
      if (f.color(chains[c].max(), s) == 0 && (pick < 0 || chains[c].max() > chains[pick].max()))
        pick = c;

    if (pick >= 0) {
      Chain extended = chains[pick];
      extended.elements.push_back(s);
      chains.erase(chains.begin() + pick);
      if (level > 1) {
        // Swap levels i-1 and i: the shrunk level drops down, the level
        // below moves up together with the extended chain.
        std::swap(state.levels[level - 2], state.levels[level - 1]);
      }
      state.levels[level - 1].push_back(extended);
      detail::sort_level(state.levels[level - 1]);
      ++state.stage;
      return StepRecord{s, level, 1, extended.elements};
    }

    if (static_cast<int>(chains.size()) < level) {
      Chain opened{{s}, state.colors_used++};
      chains.push_back(opened);
      detail::sort_level(chains);
      ++state.stage;
      return StepRecord{s, level, 2, opened.elements};
    }
  }

  HypothesisViolation violation;
  if (state.k >= 2)
    for (const Chain& chain : state.levels[state.k - 2]) violation.witness.push_back(chain.max());
  violation.witness.push_back(s);
  std::sort(violation.witness.begin(), violation.witness.end());
  violation.note = "no level can place element " + std::to_string(s) +
                   ": the input has a 1-homogeneous set of size " + std::to_string(state.k);
  return violation;
}

struct RunResult {
  ColorPartition partition;
  StepTrace trace;
  ChainLibrary final_state;
};

// On-line chain partition of a coloring transitive for color 0: every class
// is 0-homogeneous and at most k(k+1)/2 classes are used, provided no
// 1-homogeneous set of size k exists.
inline Fallible<RunResult> run(const PairColoring& f, int k) {
  if (auto t = find_transitivity_violation(f, 0))
    throw InputError("felsner input must be transitive for color 0: witness triple (" +
                     std::to_string(t->x) + ", " + std::to_string(t->y) + ", " +
                     std::to_string(t->z) + ")");

  const int n = f.universe_size();
  ChainLibrary state = ChainLibrary::fresh(k);
  RunResult result;
  result.partition.universe_size = n;
  result.partition.class_of.assign(n, 0);

  for (int s = 0; s < n; ++s) {
    auto placed = step(state, f);
    if (!placed.ok()) return placed.violation();
    // The element's class is the class of any chain-mate, i.e. the chain's
    // birth color; it never changes at later stages.
    const auto& rec = placed.value();
    const auto& chains = state.levels[rec.level - 1];
    for (const Chain& chain : chains)
      if (chain.elements.back() == s) result.partition.class_of[s] = chain.color;
    result.trace.push_back(rec);
  }

  result.partition.num_classes = state.colors_used;
  result.partition.declared_bound = color_bound(k);
  result.partition.check_well_formed();
  result.final_state = std::move(state);
  return result;
}

// Rebuilds the final library from a trace alone; used to check that traces
// capture the whole evolution.
inline ChainLibrary replay(int k, const StepTrace& trace) {
  ChainLibrary state = ChainLibrary::fresh(k);
  for (const StepRecord& rec : trace) {
    auto& chains = state.levels[rec.level - 1];
    if (rec.case_taken == 2) {
      chains.push_back(Chain{rec.chain, state.colors_used++});
    } else {
      std::vector<int> before(rec.chain.begin(), rec.chain.end() - 1);
      int pick = -1;
      for (int c = 0; c < static_cast<int>(chains.size()); ++c)
        if (chains[c].elements == before) pick = c;
      if (pick < 0) throw InputError("trace does not replay: missing chain");
      Chain extended = chains[pick];
      extended.elements.push_back(rec.element);
      chains.erase(chains.begin() + pick);
      if (rec.level > 1) std::swap(state.levels[rec.level - 2], state.levels[rec.level - 1]);
      state.levels[rec.level - 1].push_back(extended);
      detail::sort_level(state.levels[rec.level - 1]);
    }
    ++state.stage;
  }
  return state;
}

// Full invariant audit of a library against its coloring; returns the first
// failure, if any. Tests call this after every stage.
inline std::optional<std::string> audit(const ChainLibrary& state, const PairColoring& f) {
  std::vector<int> owner(state.stage, -1);
  for (int level = 1; level <= state.k - 1; ++level) {
    const auto& chains = state.levels[level - 1];
    if (static_cast<int>(chains.size()) > level)
      return "level " + std::to_string(level) + " holds more than " + std::to_string(level) +
             " chains";
    std::vector<int> maxima;
    for (const Chain& chain : chains) {
      if (chain.elements.empty()) return "empty chain";
      if (!std::is_sorted(chain.elements.begin(), chain.elements.end())) return "unsorted chain";
      if (!is_homogeneous(f, chain.elements, 0))
        return "chain at level " + std::to_string(level) + " is not 0-homogeneous";
      for (int x : chain.elements) {
        if (x < 0 || x >= state.stage) return "chain element outside [0, stage)";
        if (owner[x] != -1) return "element " + std::to_string(x) + " in two chains";
        owner[x] = level;
      }
      maxima.push_back(chain.max());
    }
    if (!is_homogeneous(f, maxima, 1))
      return "maxima of level " + std::to_string(level) + " are not 1-homogeneous";
  }
  for (int x = 0; x < state.stage; ++x)
    if (owner[x] == -1) return "element " + std::to_string(x) + " unplaced";
  return std::nullopt;
}

}  // namespace brt::felsner
