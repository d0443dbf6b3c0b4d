#include "utk/decomposition.hpp"

#include <algorithm>
#include <limits>

#include "utk/detail/flat_tree.hpp"

namespace utk {

CentroidReport white_leaf_centroid(const Shape& s) {
  if (s.is_leaf()) throw ShapeError("centroid: single-vertex tree");
  if (s.white_leaves() < 2) throw ShapeError("centroid: fewer than two white leaves");
  detail::FlatTree t(s);
  const int n = t.total_white;
  CentroidReport r;
  r.tau.resize(t.size());
  for (int v = 0; v < t.size(); ++v) {
    const auto& node = t.nodes[v];
    if (node.is_leaf()) {
      r.tau[v] = n;  // the single component plus v itself holds every white leaf
      continue;
    }
    int worst = node.parent >= 0 ? n - node.white : 0;
    for (int c : node.children) worst = std::max(worst, t.nodes[c].white);
    r.tau[v] = worst;
  }
  r.min_tau = *std::min_element(r.tau.begin(), r.tau.end());
  for (int v = 0; v < t.size(); ++v) {
    if (r.tau[v] == r.min_tau) r.centroids.push_back(v);
  }
  r.designated = r.centroids.front();
  return r;
}

const char* to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::universal: return "universal";
    case SplitKind::redleaf_descendant: return "redleaf-descendant";
    case SplitKind::redleaf_ancestor: return "redleaf-ancestor";
  }
  return "?";
}

namespace {

// Input with the subtree at `target` replaced by a red leaf.
Shape stump_at(const detail::FlatTree& t, int target, int node = 0) {
  if (node == target) return make_leaf(Color::red, t.nodes[node].subtree.arity());
  const auto& n = t.nodes[node];
  if (!t.is_ancestor(node, target)) return n.subtree;
  std::vector<Shape> parts;
  for (int c : n.children) parts.push_back(stump_at(t, target, c));
  return join(std::move(parts));
}

struct SplitPoint {
  int vertex = 0;
  int red_child = -1;       // child of vertex holding the red leaf
  int centroid_child = -1;  // ancestor case: child of vertex holding the centroid
  SplitKind kind = SplitKind::universal;
};

SplitPoint locate(const detail::FlatTree& t, const Shape& f, bool redleaf) {
  const int v = white_leaf_centroid(f).designated;
  if (!redleaf) return {v, -1, -1, SplitKind::universal};
  const int red = t.red_leaf();
  if (t.is_ancestor(v, red)) return {v, t.child_towards(v, red), -1, SplitKind::redleaf_descendant};
  int z = v;
  while (!t.is_ancestor(z, red)) z = t.nodes[z].parent;
  return {z, t.child_towards(z, red), t.child_towards(z, v), SplitKind::redleaf_ancestor};
}

void check_input(const Shape& f, bool redleaf) {
  if (f.white_leaves() < 2) throw ShapeError("split needs at least two white leaves");
  if (redleaf && !f.has_red()) throw ShapeError("redleaf split of a shape without red leaf");
  if (!redleaf && f.has_red()) throw ShapeError("universal split of a redleaf shape");
}

}  // namespace

Split split_for_universal(const Shape& f) {
  check_input(f, false);
  if (f.arity() != 2) throw ShapeError("split_for_universal expects a binary shape");
  detail::FlatTree t(f);
  const auto at = locate(t, f, false);
  const auto& kids = t.nodes[at.vertex].children;
  return Split{stump_at(t, at.vertex), t.nodes[kids[0]].subtree, t.nodes[kids[1]].subtree,
               SplitKind::universal};
}

Split split_for_redleaf(const Shape& f) {
  check_input(f, true);
  if (f.arity() != 2) throw ShapeError("split_for_redleaf expects a binary shape");
  detail::FlatTree t(f);
  const auto at = locate(t, f, true);
  const auto& kids = t.nodes[at.vertex].children;
  const int other = kids[0] == at.red_child ? kids[1] : kids[0];
  return Split{stump_at(t, at.vertex), t.nodes[at.red_child].subtree, t.nodes[other].subtree,
               at.kind};
}

DarySplit split_dary(const Shape& f, bool redleaf) {
  check_input(f, redleaf);
  detail::FlatTree t(f);
  const auto at = locate(t, f, redleaf);
  DarySplit out;
  out.stump = stump_at(t, at.vertex);
  out.kind = at.kind;
  const auto& kids = t.nodes[at.vertex].children;
  std::vector<int> order;
  if (at.red_child >= 0) order.push_back(at.red_child);
  if (at.centroid_child >= 0) order.push_back(at.centroid_child);
  for (int c : kids) {
    if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(c);
  }
  for (int c : order) out.parts.push_back(t.nodes[c].subtree);
  return out;
}

}  // namespace utk
