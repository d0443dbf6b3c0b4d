#pragma once

// Leaf-labeled scratch trees. Used wherever a construction has to track
// where individual leaves land after canonical re-sorting (tanglegram
// matchings, induced subtrees, stumps).

#include <vector>

#include "utk/shape.hpp"

namespace utk {

struct LabeledTree {
  Color color = Color::white;
  int label = -1;  // leaves only
  std::vector<LabeledTree> children;

  bool is_leaf() const { return children.empty(); }
};

/// A shape together with the label of each leaf in canonical leaf order.
struct LabeledShape {
  Shape shape;
  std::vector<int> leaf_labels;
};

/// Sorts every node's children canonically and returns the result. Unary
/// nodes are not allowed; use `suppress_unary` first if needed.
LabeledShape canonicalize(const LabeledTree& tree, int arity);

/// Leaves are labeled with their canonical positions 0..leaf_count-1.
LabeledTree to_labeled(const Shape& s);

/// Keeps only leaves whose label satisfies `keep[label]`, removes empty
/// subtrees and suppresses nodes left with a single child. Returns false if
/// nothing remains.
bool restrict_leaves(LabeledTree& tree, const std::vector<bool>& keep);

/// Subtree of `s` induced by the leaves at the given canonical positions.
/// Labels of the result are the original positions.
LabeledShape induce(const Shape& s, const std::vector<int>& positions);

/// All automorphisms of `s` as permutations of canonical leaf positions
/// (perm[i] = image of leaf i). The identity is always first.
std::vector<std::vector<int>> leaf_automorphisms(const Shape& s);

}  // namespace utk
