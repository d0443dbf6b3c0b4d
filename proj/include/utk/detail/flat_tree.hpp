#pragma once

#include <vector>

#include "utk/shape.hpp"

namespace utk::detail {

// Preorder (canonical child order) array view of a Shape. Node 0 is the root;
// preorder index order equals lexicographic order of root-to-node paths.
struct FlatTree {
  struct Node {
    int parent = -1;
    std::vector<int> children;
    Color color = Color::white;
    int white = 0;  // white leaves in the subtree
    bool red = false;
    int depth = 0;
    Shape subtree;

    bool is_leaf() const { return children.empty(); }
  };

  std::vector<Node> nodes;
  int total_white = 0;

  explicit FlatTree(const Shape& s) {
    add(s, -1, 0);
    total_white = s.white_leaves();
  }

  int size() const { return static_cast<int>(nodes.size()); }

  /// Index of the red leaf, or -1.
  int red_leaf() const {
    for (int i = 0; i < size(); ++i) {
      if (nodes[i].is_leaf() && nodes[i].color == Color::red) return i;
    }
    return -1;
  }

  bool is_ancestor(int a, int b) const {  // a is b or an ancestor of b
    for (int x = b; x >= 0; x = nodes[x].parent) {
      if (x == a) return true;
    }
    return false;
  }

  /// Child of `a` lying on the path to descendant `b`.
  int child_towards(int a, int b) const {
    int x = b;
    while (nodes[x].parent != a) x = nodes[x].parent;
    return x;
  }

 private:
  int add(const Shape& s, int parent, int depth) {
    int id = size();
    nodes.push_back(Node{});
    nodes[id].parent = parent;
    nodes[id].depth = depth;
    nodes[id].subtree = s;
    nodes[id].white = s.white_leaves();
    nodes[id].red = s.has_red();
    if (s.is_leaf()) {
      nodes[id].color = s.color();
      return id;
    }
    std::vector<int> kids;
    for (const auto& c : s.children()) kids.push_back(add(c, id, depth + 1));
    nodes[id].children = std::move(kids);
    return id;
  }
};

}  // namespace utk::detail
