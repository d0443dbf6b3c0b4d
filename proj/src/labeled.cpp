#include "utk/labeled.hpp"

#include <algorithm>
#include <numeric>

namespace utk {

LabeledShape canonicalize(const LabeledTree& tree, int arity) {
  if (tree.is_leaf()) return {Shape::leaf(tree.color, arity), {tree.label}};
  if (tree.children.size() < 2) throw ShapeError("canonicalize: unary node");
  std::vector<LabeledShape> parts;
  parts.reserve(tree.children.size());
  for (const auto& c : tree.children) parts.push_back(canonicalize(c, arity));
  std::stable_sort(parts.begin(), parts.end(), [](const LabeledShape& a, const LabeledShape& b) {
    return canonical_child_before(a.shape, b.shape);
  });
  std::vector<Shape> shapes;
  LabeledShape out;
  for (auto& p : parts) {
    shapes.push_back(p.shape);
    out.leaf_labels.insert(out.leaf_labels.end(), p.leaf_labels.begin(), p.leaf_labels.end());
  }
  out.shape = join(std::move(shapes));
  return out;
}

namespace {

LabeledTree to_labeled_from(const Shape& s, int& next) {
  LabeledTree t;
  if (s.is_leaf()) {
    t.color = s.color();
    t.label = next++;
    return t;
  }
  for (const auto& c : s.children()) t.children.push_back(to_labeled_from(c, next));
  return t;
}

}  // namespace

LabeledTree to_labeled(const Shape& s) {
  int next = 0;
  return to_labeled_from(s, next);
}

bool restrict_leaves(LabeledTree& tree, const std::vector<bool>& keep) {
  if (tree.is_leaf()) {
    return tree.label >= 0 && tree.label < static_cast<int>(keep.size()) && keep[tree.label];
  }
  std::vector<LabeledTree> kept;
  for (auto& c : tree.children) {
    if (restrict_leaves(c, keep)) kept.push_back(std::move(c));
  }
  if (kept.empty()) return false;
  if (kept.size() == 1) {
    LabeledTree only = std::move(kept.front());
    tree = std::move(only);
    return true;
  }
  tree.children = std::move(kept);
  return true;
}

LabeledShape induce(const Shape& s, const std::vector<int>& positions) {
  if (positions.empty()) throw ShapeError("induce: empty leaf set");
  std::vector<bool> keep(static_cast<std::size_t>(s.leaf_count()), false);
  for (int p : positions) {
    if (p < 0 || p >= s.leaf_count()) throw ShapeError("induce: leaf position out of range");
    keep[p] = true;
  }
  LabeledTree t = to_labeled(s);
  restrict_leaves(t, keep);
  return canonicalize(t, s.arity());
}

std::vector<std::vector<int>> leaf_automorphisms(const Shape& s) {
  const int total = s.leaf_count();
  if (s.is_leaf()) return {{0}};

  const auto children = s.children();
  const std::size_t k = children.size();
  std::vector<int> offset(k + 1, 0);
  std::vector<std::vector<std::vector<int>>> child_auts;
  for (std::size_t i = 0; i < k; ++i) {
    offset[i + 1] = offset[i] + children[i].leaf_count();
    child_auts.push_back(leaf_automorphisms(children[i]));
  }

  // inner: each child permuted by one of its own automorphisms
  std::vector<std::vector<int>> inner{std::vector<int>(total)};
  std::iota(inner.front().begin(), inner.front().end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    next.reserve(inner.size() * child_auts[i].size());
    for (const auto& base : inner) {
      for (const auto& a : child_auts[i]) {
        auto p = base;
        for (int j = 0; j < children[i].leaf_count(); ++j) p[offset[i] + j] = offset[i] + a[j];
        next.push_back(std::move(p));
      }
    }
    inner = std::move(next);
  }

  // moves: permutations of equal children, group by group
  std::vector<std::vector<std::size_t>> moves{std::vector<std::size_t>(k)};
  std::iota(moves.front().begin(), moves.front().end(), std::size_t{0});
  for (std::size_t g = 0; g < k;) {
    std::size_t e = g + 1;
    while (e < k && children[e].code() == children[g].code()) ++e;
    if (e - g > 1) {
      std::vector<std::size_t> group(e - g);
      std::iota(group.begin(), group.end(), g);
      std::vector<std::vector<std::size_t>> next;
      for (const auto& base : moves) {
        auto perm = group;
        do {
          auto m = base;
          for (std::size_t t = 0; t < group.size(); ++t) m[group[t]] = perm[t];
          next.push_back(std::move(m));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      moves = std::move(next);
    }
    g = e;
  }

  std::vector<std::vector<int>> out;
  out.reserve(inner.size() * moves.size());
  for (const auto& mv : moves) {
    for (const auto& in : inner) {
      std::vector<int> p(total);
      for (std::size_t i = 0; i < k; ++i) {
        for (int j = 0; j < children[i].leaf_count(); ++j) {
          int local = in[offset[i] + j] - offset[i];
          p[offset[i] + j] = offset[mv[i]] + local;
        }
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace utk
