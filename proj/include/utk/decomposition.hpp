#pragma once

// White-leaf centroids and the splits F = F1[F2 (+) F3 ...] that the
// recursive universal constructions are built on.

#include <vector>

#include "utk/shape.hpp"

namespace utk {

/// Vertices are numbered in preorder with canonical child order, which is
/// also the lexicographic order of their root-to-vertex paths.
struct CentroidReport {
  std::vector<int> tau;        // tau_W per vertex
  std::vector<int> centroids;  // vertices attaining the minimum, ascending
  int designated = -1;         // first centroid in preorder
  int min_tau = 0;
};

/// tau_W(v) = max over components S of T - v of |W n (S u {v})|, W the white
/// leaves. Requires >= 2 white leaves and an internal vertex.
CentroidReport white_leaf_centroid(const Shape& s);

enum class SplitKind { universal, redleaf_descendant, redleaf_ancestor };

const char* to_string(SplitKind kind);

/// Binary split. `stump` is the input with the subtree at the split vertex
/// replaced by a red leaf; graft(stump, join(f2, f3)) reproduces the input.
struct Split {
  Shape stump;
  Shape f2;
  Shape f3;
  SplitKind kind = SplitKind::universal;
};

/// Split of a white-only binary shape at its designated centroid. Every part
/// has at most floor(n/2) white leaves; f2 is the first child in canonical
/// order.
Split split_for_universal(const Shape& f);

/// Split of a binary redleaf shape. Descendant case (red leaf below the
/// centroid v): split at v with f2 the child holding the red leaf. Ancestor
/// case: split at z = lca(red leaf, v), f2 the child of z towards the red
/// leaf, f3 the child towards v.
Split split_for_redleaf(const Shape& f);

/// d-ary split: stump plus every child subtree of the split vertex.
/// graft(stump, join(parts)) reproduces the input. For redleaf inputs the
/// part holding the red leaf comes first, and in the ancestor case the part
/// holding the centroid comes second.
struct DarySplit {
  Shape stump;
  std::vector<Shape> parts;
  SplitKind kind = SplitKind::universal;
};

DarySplit split_dary(const Shape& f, bool redleaf);

}  // namespace utk
