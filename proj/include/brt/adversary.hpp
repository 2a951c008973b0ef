#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/streams.hpp"

namespace brt::adversary {

// State of the stage machine after one stage: which streams are active,
// which elements sit in state 1 (colored 1 against later stages), the
// cumulative trash, and the element each active stream holds.
struct StageSnapshot {
  int stage = 0;
  bool flushed = false;
  std::vector<int> newly_active;            // ascending
  std::vector<int> active;                  // ascending
  std::vector<int> trash;                   // ascending, grows monotonically
  std::vector<std::pair<int, int>> held;    // (stream, element), stream ascending
  std::vector<int> ones;                    // elements in state 1, ascending
};

struct SingleBlockResult {
  PairColoring coloring;  // universe = horizon
  std::vector<StageSnapshot> trace;
  int watch_count = 0;
  int base = 0;
  int last_flush_stage = -1;  // -1 when no stream ever activated
};

// Stage construction: stream e < watch_count activates once it has
// enumerated more than watch_count^2 elements in [base, s]; each
// activation trashes every state-1 element and every active stream then
// picks the least untrashed enumerated element in [base, s] as its new
// state-1 element. f(x, s) is the state of x at stage s. The result never
// contains a 1-homogeneous set of size 3, and f(x, y) = 0 whenever x < base.
inline SingleBlockResult single_block_coloring(const StreamFamily& streams, int watch_count,
                                               int base, int horizon) {
  if (watch_count < 0 || base < 0) throw InputError("watch count and base must be >= 0");
  if (horizon < 0 || horizon > streams.horizon())
    throw InputError("construction horizon must lie within the stream horizon");

  const int watched = std::min(watch_count, streams.num_streams());
  const long long threshold = static_cast<long long>(watch_count) * watch_count;

  SingleBlockResult result;
  result.coloring = PairColoring(horizon);
  result.watch_count = watch_count;
  result.base = base;

  std::vector<uint8_t> state(horizon, 0);
  std::vector<char> active(watched, 0);
  std::vector<int> held(watched, -1);
  std::vector<char> trashed(horizon, 0);
  std::vector<int> trash;

  for (int s = 0; s < horizon; ++s) {
    std::vector<int> newly;
    for (int e = 0; e < watched; ++e)
      if (!active[e] && streams.count_in_range(e, s, base, s) > threshold) {
        active[e] = 1;
        newly.push_back(e);
      }

    if (!newly.empty()) {
      result.last_flush_stage = s;
      for (int x = 0; x < horizon; ++x)
        if (state[x]) {
          state[x] = 0;
          if (!trashed[x]) {
            trashed[x] = 1;
            trash.push_back(x);
          }
        }
      for (int e = 0; e < watched; ++e) {
        if (!active[e]) continue;
        int pick = -1;
        for (int x : streams.enumerated_by(e, s)) {
          if (x < base || x > s) continue;
          if (trashed[x]) continue;
          pick = x;
          break;
        }
        if (pick < 0)
          throw InternalError("no pickable element for stream " + std::to_string(e) +
                              " at stage " + std::to_string(s));
        state[pick] = 1;
        held[e] = pick;
      }
      if (static_cast<long long>(trash.size()) > threshold)
        throw InternalError("trash exceeded watch_count^2 at stage " + std::to_string(s));
    }

    for (int x = 0; x < s; ++x)
      if (state[x]) result.coloring.set(x, s, 1);

    StageSnapshot snap;
    snap.stage = s;
    snap.flushed = !newly.empty();
    snap.newly_active = std::move(newly);
    for (int e = 0; e < watched; ++e)
      if (active[e]) {
        snap.active.push_back(e);
        snap.held.emplace_back(e, held[e]);
      }
    snap.trash = trash;
    for (int x = 0; x < horizon; ++x)
      if (state[x]) snap.ones.push_back(x);
    result.trace.push_back(std::move(snap));
  }

  return result;
}

// Finite model of a stagewise-approximated function on a cut of size
// cut_bound: value[s][i] is the stage-s guess for position i. Guesses are
// monotone in the position, non-decreasing in the stage, and dominated by
// the stage number (so row 0 is all zeros).
struct ApproximationSchedule {
  int cut_bound = 0;
  int horizon = 0;
  std::vector<std::vector<int>> value;  // value[s][i]

  void validate() const {
    if (cut_bound < 0 || horizon < 0) throw InputError("schedule dimensions must be >= 0");
    if (static_cast<int>(value.size()) != horizon) throw InputError("schedule rows != horizon");
    for (int s = 0; s < horizon; ++s) {
      if (static_cast<int>(value[s].size()) != cut_bound)
        throw InputError("schedule row " + std::to_string(s) + " has the wrong width");
      for (int i = 0; i < cut_bound; ++i) {
        if (value[s][i] < 0) throw InputError(cell(i, s) + " is negative");
        if (i > 0 && value[s][i] < value[s][i - 1])
          throw InputError(cell(i, s) + " breaks monotonicity in the position");
        if (s > 0 && value[s][i] < value[s - 1][i])
          throw InputError(cell(i, s) + " breaks monotonicity in the stage");
        if (value[s][i] > (s > 0 ? s - 1 : 0))
          throw InputError(cell(i, s) + " is not dominated by the stage");
      }
    }
  }

  static std::string cell(int i, int s) {
    return "schedule entry (i=" + std::to_string(i) + ", s=" + std::to_string(s) + ")";
  }
};

// A maximal run of stages over which component i keeps the same
// (watch_count, base) parameters, together with the machine run for it.
struct ComponentBlock {
  int start = 0;  // stage range [start, end)
  int end = 0;
  SingleBlockResult machine;  // horizon = end
};

struct CompositeResult {
  PairColoring coloring;                 // disjunction of the components
  std::vector<PairColoring> components;  // one per position i < cut_bound
  std::vector<std::vector<int>> block_base;  // block_base[i][s]
  std::vector<std::vector<ComponentBlock>> blocks;  // per component, stage-ordered
};

// Composite coloring driven by the schedule: at stage s component i uses
// the machine with watch count value[s][i] and base block_base[i][s], the
// last stage at which the guess for i changed. A pair is 1-colored iff some
// component colors it 1.
inline CompositeResult composite_coloring(const StreamFamily& streams,
                                          const ApproximationSchedule& sched) {
  sched.validate();
  const int s_max = sched.horizon;
  if (s_max > streams.horizon())
    throw InputError("schedule horizon exceeds the stream horizon");

  CompositeResult result;
  result.coloring = PairColoring(s_max);
  result.block_base.assign(sched.cut_bound, std::vector<int>(s_max, 0));
  result.blocks.resize(sched.cut_bound);

  for (int i = 0; i < sched.cut_bound; ++i) {
    int last_change = 0;  // stage 0 counts as no change
    for (int s = 0; s < s_max; ++s) {
      if (s > 0 && sched.value[s][i] != sched.value[s - 1][i]) last_change = s;
      result.block_base[i][s] = last_change;
    }

    PairColoring component(s_max);
    for (int start = 0; start < s_max;) {
      int end = start + 1;
      while (end < s_max && result.block_base[i][end] == result.block_base[i][start]) ++end;
      ComponentBlock block;
      block.start = start;
      block.end = end;
      block.machine = single_block_coloring(streams, sched.value[start][i],
                                            result.block_base[i][start], end);
      for (int s = start; s < end; ++s)
        for (int x = 0; x < s; ++x)
          if (block.machine.coloring.color(x, s) == 1) component.set(x, s, 1);
      result.blocks[i].push_back(std::move(block));
      start = end;
    }
    result.components.push_back(std::move(component));
  }

  for (int y = 1; y < s_max; ++y)
    for (int x = 0; x < y; ++x)
      for (const auto& component : result.components)
        if (component.color(x, y) == 1) {
          result.coloring.set(x, y, 1);
          break;
        }
  return result;
}

// Per-stream diagonalization outcome. `sufficient` records the
// finite-horizon guarantee: the stream activated and enumerated an element
// past the final reset, which forces a 1-colored pair inside it.
struct StreamCatch {
  int stream = -1;
  bool watched = false;
  bool activated = false;
  bool sufficient = false;
  bool caught = false;
  int witness_low = -1;   // x: base <= x < y, both enumerated by the stream
  int witness_high = -1;  // y
  int component = -1;     // composite only: least component with a 1-edge
  std::string reason;     // empty when caught
};

struct DiagonalizationReport {
  std::vector<StreamCatch> entries;

  bool all_sufficient_caught() const {
    for (const auto& entry : entries)
      if (entry.sufficient && !entry.caught) return false;
    return true;
  }
};

namespace detail {

inline bool machine_sufficiency(const SingleBlockResult& machine, const StreamFamily& streams,
                                int stream, bool* activated_out) {
  const int watched = std::min(machine.watch_count, streams.num_streams());
  bool activated = false;
  if (stream < watched && !machine.trace.empty()) {
    const auto& final_snap = machine.trace.back();
    activated = std::binary_search(final_snap.active.begin(), final_snap.active.end(), stream);
  }
  if (activated_out) *activated_out = activated;
  if (!activated) return false;

  int held = -1;
  for (auto [e, x] : machine.trace.back().held)
    if (e == stream) held = x;
  for (int y : streams.members(stream))
    if (y >= machine.last_flush_stage && y > held && y < static_cast<int>(machine.trace.size()))
      return true;
  return false;
}

// First (lexicographically) 1-colored pair inside the stream, with
// witness_low >= base.
inline bool find_witness(const PairColoring& f, const StreamFamily& streams, int stream, int base,
                         StreamCatch* out) {
  std::vector<int> members = streams.members(stream);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < base) continue;
    if (members[i] >= f.universe_size()) break;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[j] >= f.universe_size()) break;
      if (f.color(members[i], members[j]) == 1) {
        out->caught = true;
        out->witness_low = members[i];
        out->witness_high = members[j];
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

inline DiagonalizationReport diagonalization_report(const SingleBlockResult& machine,
                                                    const StreamFamily& streams) {
  DiagonalizationReport report;
  for (int e = 0; e < streams.num_streams(); ++e) {
    StreamCatch entry;
    entry.stream = e;
    entry.watched = e < machine.watch_count;
    entry.sufficient = detail::machine_sufficiency(machine, streams, e, &entry.activated);
    detail::find_witness(machine.coloring, streams, e, machine.base, &entry);
    if (!entry.caught) {
      if (!entry.watched)
        entry.reason = "not watched";
      else if (!entry.activated)
        entry.reason = "never activated";
      else
        entry.reason = "not yet caught";
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

inline DiagonalizationReport diagonalization_report(const CompositeResult& composite,
                                                    const StreamFamily& streams) {
  DiagonalizationReport report;
  for (int e = 0; e < streams.num_streams(); ++e) {
    StreamCatch entry;
    entry.stream = e;
    for (std::size_t i = 0; i < composite.blocks.size(); ++i) {
      if (composite.blocks[i].empty()) continue;
      bool activated = false;
      bool sufficient =
          detail::machine_sufficiency(composite.blocks[i].back().machine, streams, e, &activated);
      entry.watched = entry.watched || e < composite.blocks[i].back().machine.watch_count;
      entry.activated = entry.activated || activated;
      entry.sufficient = entry.sufficient || sufficient;
    }
    if (detail::find_witness(composite.coloring, streams, e, 0, &entry)) {
      for (std::size_t i = 0; i < composite.components.size(); ++i)
        if (composite.components[i].color(entry.witness_low, entry.witness_high) == 1) {
          entry.component = static_cast<int>(i);
          break;
        }
    } else {
      if (!entry.watched)
        entry.reason = "not watched";
      else if (!entry.activated)
        entry.reason = "never activated";
      else
        entry.reason = "not yet caught";
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace brt::adversary
