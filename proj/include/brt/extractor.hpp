#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "brt/coloring.hpp"
#include "brt/errors.hpp"

namespace brt::extractor {

// Rooted tree over universe elements. Paths from the root carry pairwise
// 1-colored labels; the children of any node are pairwise 0-colored; every
// inserted element labels exactly one node.
class PlacementTree {
 public:
  struct Node {
    int label;   // -1 for the root
    int parent;  // -1 for the root
    int depth;   // labels on the path from the root
    std::vector<int> children;  // node ids in creation order
  };

  PlacementTree() { nodes_.push_back({-1, -1, 0, {}}); }

  // Canonical descent: from the root, repeatedly enter the first child (in
  // insertion order) whose label is 1-colored with x; attach x where no
  // such child exists. Returns the new node id.
  int insert(int x, const PairColoring& f) {
    if (x < 0 || x >= f.universe_size()) throw InputError("element out of universe");
    if (contains(x)) throw InputError("element " + std::to_string(x) + " already placed");
    int at = 0;
    while (true) {
      int next = -1;
      for (int child : nodes_[at].children)
        if (f.color(nodes_[child].label, x) == 1) {
          next = child;
          break;
        }
      if (next < 0) break;
      at = next;
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({x, at, nodes_[at].depth + 1, {}});
    nodes_[at].children.push_back(id);
    if (x >= static_cast<int>(placed_.size())) placed_.resize(x + 1, 0);
    placed_[x] = 1;
    return id;
  }

  bool contains(int x) const {
    return x >= 0 && x < static_cast<int>(placed_.size()) && placed_[x];
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_[0]; }

  // Labels on the path from the root down to node id, ascending by element.
  std::vector<int> path_labels(int id) const {
    std::vector<int> labels;
    for (int at = id; at != 0; at = nodes_[at].parent) labels.push_back(nodes_[at].label);
    std::sort(labels.begin(), labels.end());
    return labels;
  }

  std::vector<int> child_labels(int id) const {
    std::vector<int> labels;
    for (int child : nodes_[id].children) labels.push_back(nodes_[child].label);
    std::sort(labels.begin(), labels.end());
    return labels;
  }

  int depth() const {
    int d = 0;
    for (const Node& node : nodes_) d = std::max(d, node.depth);
    return d;
  }

  // Node count per depth, the root excluded from level 0 accounting.
  std::vector<int> level_counts() const {
    std::vector<int> counts(depth() + 1, 0);
    for (const Node& node : nodes_) ++counts[node.depth];
    counts[0] = 0;
    return counts;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<char> placed_;
};

struct SolveStats {
  std::vector<int> level_counts;  // nodes per depth, depth 0 (the root) is 0
  int tree_depth = 0;
  int chosen_node = 0;  // id of the node whose children were returned
};

struct SolveResult {
  std::vector<int> homogeneous_set;  // 0-homogeneous, ascending
  SolveStats stats;
  PlacementTree tree;
};

// Guaranteed size of the extracted set on a universe of n elements when no
// 1-homogeneous set of size `bound` exists: floor((n/(bound-1))^(1/(bound-1))),
// computed in exact integer arithmetic.
inline int guaranteed_size(int n, int bound) {
  if (n <= 0 || bound < 2) return 0;
  auto fits = [&](long long c) {  // c^(bound-1) * (bound-1) <= n ?
    long long product = bound - 1;
    for (int i = 0; i < bound - 1; ++i) {
      product *= c;
      if (product > n) return false;
    }
    return product <= n;
  };
  int c = 0;
  while (fits(c + 1)) ++c;
  return c;
}

// Inserts the whole universe, then returns the children of the node with
// the most children (earliest-created node on ties). A path reaching
// `bound` labels is a 1-homogeneous witness that the hypothesis failed.
inline Fallible<SolveResult> solve(const PairColoring& f, int bound) {
  if (bound < 2) throw InputError("extraction bound must be >= 2");

  SolveResult result;
  for (int x = 0; x < f.universe_size(); ++x) {
    int id = result.tree.insert(x, f);
    if (result.tree.nodes()[id].depth >= bound) {
      HypothesisViolation violation;
      violation.witness = result.tree.path_labels(id);
      violation.note = "descent path of length " + std::to_string(bound) +
                       " is 1-homogeneous; the size-" + std::to_string(bound) +
                       " hypothesis fails";
      return violation;
    }
  }

  const auto& nodes = result.tree.nodes();
  int best = 0;
  for (int id = 1; id < static_cast<int>(nodes.size()); ++id)
    if (nodes[id].children.size() > nodes[best].children.size()) best = id;

  result.homogeneous_set = result.tree.child_labels(best);
  result.stats.level_counts = result.tree.level_counts();
  result.stats.tree_depth = result.tree.depth();
  result.stats.chosen_node = best;
  return result;
}

}  // namespace brt::extractor
