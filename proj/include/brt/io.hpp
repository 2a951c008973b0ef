#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "brt/adversary.hpp"
#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/poset.hpp"
#include "brt/streams.hpp"

namespace brt::io {

namespace detail {

inline std::vector<long long> parse_ints(const std::string& line, std::size_t expected, int lineno) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long v;
  while (in >> v) values.push_back(v);
  std::string rest;
  if (in.clear(), in >> rest)
    throw InputError("line " + std::to_string(lineno) + ": trailing junk '" + rest + "'");
  if (values.size() != expected)
    throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(expected) +
                     " integers, found " + std::to_string(values.size()));
  return values;
}

inline bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;  // skip blank lines
    return true;
  }
  return false;
}

}  // namespace detail

// Coloring text format: first line N; lines "x y c" with 0 <= x < y < N and
// c in {0,1}; unlisted pairs default to color 0; duplicate pairs error.
inline PairColoring read_coloring(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_line(in, line, lineno)) throw InputError("empty coloring file");
  long long n = detail::parse_ints(line, 1, lineno)[0];
  if (n < 0) throw InputError("universe size must be >= 0");
  PairColoring f(static_cast<int>(n));
  std::set<std::pair<int, int>> seen;
  while (detail::next_line(in, line, lineno)) {
    auto v = detail::parse_ints(line, 3, lineno);
    auto [x, y, c] = std::tuple(v[0], v[1], v[2]);
    if (!(0 <= x && x < y && y < n))
      throw InputError("line " + std::to_string(lineno) + ": pair requires 0 <= x < y < N");
    if (c != 0 && c != 1)
      throw InputError("line " + std::to_string(lineno) + ": color must be 0 or 1");
    if (!seen.insert({static_cast<int>(x), static_cast<int>(y)}).second)
      throw InputError("line " + std::to_string(lineno) + ": duplicate pair");
    f.set(static_cast<int>(x), static_cast<int>(y), static_cast<int>(c));
  }
  return f;
}

// Canonical writer: only 1-colored pairs, ascending.
inline void write_coloring(std::ostream& out, const PairColoring& f) {
  out << f.universe_size() << "\n";
  for (int x = 0; x + 1 < f.universe_size(); ++x)
    for (int y = x + 1; y < f.universe_size(); ++y)
      if (f.color(x, y) == 1) out << x << " " << y << " 1\n";
}

// Poset text format: first line N; lines "x y" meaning x <_P y. The listed
// relation must already be a strict partial order; it is validated on load.
inline PosetView read_poset(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_line(in, line, lineno)) throw InputError("empty poset file");
  long long n = detail::parse_ints(line, 1, lineno)[0];
  if (n < 0) throw InputError("universe size must be >= 0");
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  while (detail::next_line(in, line, lineno)) {
    auto v = detail::parse_ints(line, 2, lineno);
    if (v[0] < 0 || v[0] >= n || v[1] < 0 || v[1] >= n)
      throw InputError("line " + std::to_string(lineno) + ": element out of universe");
    if (!seen.insert({static_cast<int>(v[0]), static_cast<int>(v[1])}).second)
      throw InputError("line " + std::to_string(lineno) + ": duplicate pair");
    pairs.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  return PosetView::from_relation(static_cast<int>(n), pairs);
}

inline void write_poset(std::ostream& out, const PosetView& p) {
  out << p.universe_size() << "\n";
  for (int x = 0; x < p.universe_size(); ++x)
    for (int y = 0; y < p.universe_size(); ++y)
      if (x != y && p.less(x, y)) out << x << " " << y << "\n";
}

// Stream text format: first line "E S"; lines "e x s".
inline StreamFamily read_streams(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_line(in, line, lineno)) throw InputError("empty stream file");
  auto header = detail::parse_ints(line, 2, lineno);
  std::vector<StreamEvent> events;
  while (detail::next_line(in, line, lineno)) {
    auto v = detail::parse_ints(line, 3, lineno);
    events.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
  }
  return StreamFamily(static_cast<int>(header[0]), static_cast<int>(header[1]), std::move(events));
}

inline void write_streams(std::ostream& out, const StreamFamily& streams) {
  out << streams.num_streams() << " " << streams.horizon() << "\n";
  auto events = streams.events();
  std::sort(events.begin(), events.end(), [](const StreamEvent& a, const StreamEvent& b) {
    if (a.stream != b.stream) return a.stream < b.stream;
    if (a.stage != b.stage) return a.stage < b.stage;
    return a.element < b.element;
  });
  for (const auto& ev : events) out << ev.stream << " " << ev.element << " " << ev.stage << "\n";
}

// Schedule text format: first line "k S"; lines "i s v"; omitted cells
// inherit the previous stage's value (stage 0 defaults to 0).
inline adversary::ApproximationSchedule read_schedule(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_line(in, line, lineno)) throw InputError("empty schedule file");
  auto header = detail::parse_ints(line, 2, lineno);
  adversary::ApproximationSchedule sched;
  sched.cut_bound = static_cast<int>(header[0]);
  sched.horizon = static_cast<int>(header[1]);
  if (sched.cut_bound < 0 || sched.horizon < 0) throw InputError("schedule dimensions must be >= 0");

  std::vector<std::vector<std::pair<bool, int>>> cells(
      sched.horizon, std::vector<std::pair<bool, int>>(sched.cut_bound, {false, 0}));
  while (detail::next_line(in, line, lineno)) {
    auto v = detail::parse_ints(line, 3, lineno);
    auto [i, s, val] = std::tuple(v[0], v[1], v[2]);
    if (i < 0 || i >= sched.cut_bound || s < 0 || s >= sched.horizon)
      throw InputError("line " + std::to_string(lineno) + ": cell out of range");
    if (cells[s][i].first)
      throw InputError("line " + std::to_string(lineno) + ": duplicate cell");
    cells[s][i] = {true, static_cast<int>(val)};
  }
  sched.value.assign(sched.horizon, std::vector<int>(sched.cut_bound, 0));
  for (int s = 0; s < sched.horizon; ++s)
    for (int i = 0; i < sched.cut_bound; ++i)
      sched.value[s][i] = cells[s][i].first ? cells[s][i].second
                                            : (s > 0 ? sched.value[s - 1][i] : 0);
  sched.validate();
  return sched;
}

inline void write_schedule(std::ostream& out, const adversary::ApproximationSchedule& sched) {
  out << sched.cut_bound << " " << sched.horizon << "\n";
  for (int s = 0; s < sched.horizon; ++s)
    for (int i = 0; i < sched.cut_bound; ++i) {
      bool changed = s == 0 ? sched.value[s][i] != 0 : sched.value[s][i] != sched.value[s - 1][i];
      if (changed) out << i << " " << s << " " << sched.value[s][i] << "\n";
    }
}

}  // namespace brt::io
