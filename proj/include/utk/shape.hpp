#pragma once

// Rooted, unlabeled tree shapes with white leaves and at most one red leaf.
//
// A Shape is an immutable value. Every internal node keeps its children in
// canonical order, so two shapes are isomorphic exactly when their canonical
// codes are equal. Copies share structure.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace utk {

enum class Color : std::uint8_t { white, red };

/// Raised when an operation would violate a shape invariant
/// (arity bound, more than one red leaf, missing red leaf, ...).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers (canonical code, Newick).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text encoding of a shape over the alphabet ( ) o r.
/// Leaf -> "o" (white) or "r" (red); internal -> "(" + children + ")".
struct CanonicalCode {
  std::string text;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

class Shape {
 public:
  /// A single white leaf of arity bound 2.
  Shape();

  static Shape leaf(Color color = Color::white, int arity = 2);

  /// Joins a new root above `parts`. All parts must share one arity bound d,
  /// 2 <= parts.size() <= d, and at most one part may carry a red leaf.
  static Shape join(std::vector<Shape> parts);

  bool is_leaf() const;
  Color color() const;  // only meaningful for leaves
  std::span<const Shape> children() const;

  int arity() const;
  int white_leaves() const;
  bool has_red() const;
  int height() const;
  int leaf_count() const;  // white + red
  int node_count() const;

  const std::string& code() const;

  /// Same tree with a different arity bound; throws if some node has more
  /// than `d` children.
  Shape with_arity(int d) const;

  friend bool operator==(const Shape& a, const Shape& b);

 private:
  struct Node;
  explicit Shape(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Strict weak order used for child sorting: descending byte order of codes.
bool canonical_child_before(const Shape& a, const Shape& b);

Shape make_leaf(Color color, int arity = 2);
Shape join(const Shape& a, const Shape& b);
Shape join(std::vector<Shape> parts);

/// R[Q]: replaces the red leaf of `host` by `scion`.
Shape graft(const Shape& host, const Shape& scion);

Shape caterpillar(int n, int arity = 2);
Shape complete(int h, int arity = 2);

struct JellyfishSpec {
  int h = 0;
  int ell = 2;
};

/// Complete tree of height h with a caterpillar C_ell hung at every leaf.
Shape jellyfish(JellyfishSpec spec, int arity = 2);

int white_leaf_count(const Shape& s);
int height(const Shape& s);
CanonicalCode canonical_code(const Shape& s);

/// Reads a code; children may appear in any order and are re-sorted.
Shape parse_code(std::string_view text, int arity = 2);

/// Newick export: white leaf "x", red leaf "R", children in canonical order.
std::string to_newick(const Shape& s);

/// Newick import. Leaf label "R" is the red leaf, every other label (or no
/// label) is white. Branch lengths are accepted and ignored.
Shape parse_newick(std::string_view text, int arity = 2);

/// Accepts either a canonical code or a Newick string.
Shape parse_shape(std::string_view text, int arity = 2);

/// Graphviz rendering: leaves as circles (red leaf filled), root as a box.
std::string to_dot(const Shape& s, std::string_view graph_name = "shape");

/// Every shape with n white leaves (and exactly one red leaf when `redleaf`)
/// whose internal nodes have 2..d children, once per isomorphism class,
/// sorted ascending by code.
std::vector<Shape> enumerate_shapes(int n, int d = 2, bool redleaf = false);

/// Number of shapes enumerate_shapes(n, d, redleaf) would return, computed
/// by counting multisets instead of materializing.
std::uint64_t count_shapes(int n, int d = 2, bool redleaf = false);

/// Wedderburn-Etherington numbers by their standard recurrence.
std::uint64_t wedderburn_etherington(int n);

/// Depth of every leaf in canonical leaf order.
std::vector<int> leaf_depths(const Shape& s);

}  // namespace utk
