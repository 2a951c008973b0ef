#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"
#include "brt/poset.hpp"

namespace brt {

// Total assignment of universe elements to classes. num_classes counts the
// classes actually used (indices 0-based and contiguous); declared_bound,
// when set, is the producing algorithm's a-priori bound.
struct ColorPartition {
  int universe_size = 0;
  int num_classes = 0;
  std::optional<int> declared_bound;
  std::vector<int> class_of;

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(num_classes);
    for (int x = 0; x < universe_size; ++x) out[class_of[x]].push_back(x);
    return out;
  }

  // Checks totality and that used class indices are exactly [0, num_classes).
  void check_well_formed() const {
    if (static_cast<int>(class_of.size()) != universe_size)
      throw InputError("partition does not cover the universe");
    std::vector<char> used(num_classes, 0);
    for (int c : class_of) {
      if (c < 0 || c >= num_classes) throw InputError("class index out of range");
      used[c] = 1;
    }
    for (int i = 0; i < num_classes; ++i)
      if (!used[i] && universe_size > 0)
        throw InputError("class index " + std::to_string(i) + " unused");
    if (declared_bound && num_classes > *declared_bound)
      throw InputError("used class count exceeds the declared bound");
  }

  bool operator==(const ColorPartition& other) const = default;
};

// Reindexes arbitrary class keys to contiguous 0-based indices in ascending
// key order, so equal inputs yield identical partitions.
template <typename Key>
ColorPartition compact_partition(const std::vector<Key>& keys, std::optional<int> declared_bound) {
  std::map<Key, int> index;
  for (const Key& k : keys) index.emplace(k, 0);
  int next = 0;
  for (auto& [k, idx] : index) idx = next++;
  ColorPartition g;
  g.universe_size = static_cast<int>(keys.size());
  g.num_classes = next;
  g.declared_bound = declared_bound;
  g.class_of.reserve(keys.size());
  for (const Key& k : keys) g.class_of.push_back(index.at(k));
  return g;
}

enum class PartitionMode { ZeroHomogeneous, Chain, Antichain };

inline std::string to_string(PartitionMode m) {
  switch (m) {
    case PartitionMode::ZeroHomogeneous: return "zero-homog";
    case PartitionMode::Chain: return "chain";
    case PartitionMode::Antichain: return "antichain";
  }
  return "?";
}

struct ClassViolation {
  int cls;
  int x, y;  // witness pair inside the class
};

struct ValidationReport {
  std::vector<ClassViolation> violations;
  bool valid() const { return violations.empty(); }
};

namespace detail {

template <typename BadPair>
ValidationReport validate_classes(const ColorPartition& g, int universe_size, BadPair&& bad) {
  if (g.universe_size != universe_size) throw InputError("partition universe mismatch");
  g.check_well_formed();
  ValidationReport report;
  for (int cls = 0; cls < g.num_classes; ++cls) {
    std::vector<int> members;
    for (int x = 0; x < universe_size; ++x)
      if (g.class_of[x] == cls) members.push_back(x);
    bool violated = false;
    for (std::size_t i = 0; i < members.size() && !violated; ++i)
      for (std::size_t j = i + 1; j < members.size() && !violated; ++j)
        if (bad(members[i], members[j])) {
          report.violations.push_back({cls, members[i], members[j]});
          violated = true;  // one witness per class
        }
  }
  return report;
}

}  // namespace detail

// Every class must be 0-homogeneous under f.
inline ValidationReport validate_partition(const PairColoring& f, const ColorPartition& g,
                                           PartitionMode mode) {
  if (mode != PartitionMode::ZeroHomogeneous)
    throw InputError("coloring subjects support only zero-homog validation");
  return detail::validate_classes(g, f.universe_size(),
                                  [&](int x, int y) { return f.color(x, y) != 0; });
}

// Every class must be a chain (or antichain) of p.
inline ValidationReport validate_partition(const PosetView& p, const ColorPartition& g,
                                           PartitionMode mode) {
  if (mode == PartitionMode::Chain)
    return detail::validate_classes(g, p.universe_size(),
                                    [&](int x, int y) { return !p.comparable(x, y); });
  if (mode == PartitionMode::Antichain)
    return detail::validate_classes(g, p.universe_size(),
                                    [&](int x, int y) { return p.comparable(x, y); });
  throw InputError("poset subjects support only chain/antichain validation");
}

}  // namespace brt
