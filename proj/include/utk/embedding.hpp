#pragma once

// Induced-subtree containment and unlabeled maximum agreement subtrees.

#include <cstdint>
#include <vector>

#include "utk/detail/flat_tree.hpp"
#include "utk/shape.hpp"

namespace utk {

/// Memoized containment table over (pattern node, host node) pairs.
///
/// contains(p, v) holds when the pattern subtree at p is induced by some leaf
/// set of the host subtree at v:
///   * p embeds in the subtree of some child of v, or
///   * p is a leaf and the subtree at v has a leaf of the same color, or
///   * p is internal and its children can be assigned to pairwise distinct
///     children of v, each embedding in its assigned child.
/// A red pattern leaf may only use the host's red leaf; white pattern leaves
/// never use it.
class EmbedTable {
 public:
  EmbedTable(const Shape& pattern, const Shape& host);

  bool contains();
  bool contains(int pattern_node, int host_node);

  std::size_t entries() const { return memo_.size(); }

 private:
  bool compute(int p, int v);
  bool assign(int p, int v);

  detail::FlatTree pattern_;
  detail::FlatTree host_;
  std::vector<std::int8_t> memo_;  // -1 unknown, 0 false, 1 true
};

bool is_induced_subtree(const Shape& pattern, const Shape& host);

/// Size of a maximum agreement subtree of two white-only binary shapes.
int mast(const Shape& t1, const Shape& t2);

/// Closed form 2^{h1} (m + 1 - h1), m = min(h1 + l1 - 1, h2 + l2 - 1), with
/// the arguments ordered so that h1 <= h2.
std::int64_t jellyfish_mast(JellyfishSpec s1, JellyfishSpec s2);

}  // namespace utk
