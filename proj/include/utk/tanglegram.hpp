#pragma once

// Tanglegrams: two white-only trees of equal size plus a perfect matching
// between their leaves. Isomorphisms fix the left and the right root
// separately; left/right swaps are not quotiented out.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "utk/shape.hpp"

namespace utk {

struct Tanglegram {
  Shape left;
  Shape right;
  /// matching[i] = canonical position of the right leaf matched to the left
  /// leaf at canonical position i.
  std::vector<int> matching;

  int size() const { return static_cast<int>(matching.size()); }
};

/// Validates the invariants (white-only trees, same arity, equal sizes,
/// matching is a permutation) and returns the tanglegram.
Tanglegram make_tanglegram(Shape left, Shape right, std::vector<int> matching);

/// code(left) "|" code(right) "|" lexicographically least matching over all
/// pairs of leaf automorphisms, comma separated.
struct TanglegramCode {
  std::string text;

  auto operator<=>(const TanglegramCode&) const = default;
  bool operator==(const TanglegramCode&) const = default;
};

TanglegramCode canonical_tanglegram(const Tanglegram& t);

/// One representative per isomorphism class of size-n tanglegrams with
/// d-ary trees, each carrying its canonical matching, sorted by code.
std::vector<Tanglegram> enumerate_tanglegrams(int n, int d = 2, int threads = 1);

/// Subtanglegram induced by the matching edges leaving the given left leaf
/// positions.
Tanglegram induced_subtanglegram(const Tanglegram& t, const std::vector<int>& left_positions);

bool is_induced_subtanglegram(const Tanglegram& small, const Tanglegram& big);

/// True iff every size-n class (same arity as `t`) is an induced
/// subtanglegram of `t`.
bool is_universal_tanglegram(const Tanglegram& t, int n);

/// `<newick-left>|<newick-right>|<0-based matching, space separated>`
std::string format_tanglegram(const Tanglegram& t);
Tanglegram parse_tanglegram(std::string_view text, int arity = 2);

/// The two trees face each other; matching edges are dashed.
std::string tanglegram_to_dot(const Tanglegram& t);

}  // namespace utk
