#include "utk/embedding.hpp"

#include <algorithm>
#include <functional>

namespace utk {

EmbedTable::EmbedTable(const Shape& pattern, const Shape& host) : pattern_(pattern), host_(host) {
  if (pattern.arity() != host.arity()) {
    throw ShapeError("embedding: pattern and host have different arity bounds");
  }
  memo_.assign(static_cast<std::size_t>(pattern_.size()) * host_.size(), -1);
}

bool EmbedTable::contains() { return contains(0, 0); }

bool EmbedTable::contains(int p, int v) {
  auto& slot = memo_[static_cast<std::size_t>(p) * host_.size() + v];
  if (slot < 0) slot = compute(p, v) ? 1 : 0;
  return slot == 1;
}

bool EmbedTable::compute(int p, int v) {
  const auto& pn = pattern_.nodes[p];
  const auto& hn = host_.nodes[v];
  if (pn.white > hn.white || (pn.red && !hn.red)) return false;
  if (pn.is_leaf()) return pn.color == Color::red ? hn.red : hn.white > 0;
  if (hn.is_leaf()) return false;
  if (pn.subtree.height() > hn.subtree.height()) return false;
  for (int c : hn.children) {
    if (contains(p, c)) return true;
  }
  return assign(p, v);
}

// Bipartite matching of pattern children into distinct host children.
bool EmbedTable::assign(int p, int v) {
  const auto& pk = pattern_.nodes[p].children;
  const auto& hk = host_.nodes[v].children;
  if (pk.size() > hk.size()) return false;
  std::vector<int> owner(hk.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i,
                                                                     std::vector<bool>& seen) {
    for (std::size_t j = 0; j < hk.size(); ++j) {
      if (seen[j] || !contains(pk[i], hk[j])) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < pk.size(); ++i) {
    std::vector<bool> seen(hk.size(), false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

bool is_induced_subtree(const Shape& pattern, const Shape& host) {
  if (pattern.arity() != host.arity()) {
    throw ShapeError("embedding: pattern and host have different arity bounds");
  }
  if (pattern.white_leaves() > host.white_leaves() || pattern.height() > host.height()) return false;
  if (pattern.has_red() && !host.has_red()) return false;
  return EmbedTable(pattern, host).contains();
}

int mast(const Shape& t1, const Shape& t2) {
  for (const Shape* t : {&t1, &t2}) {
    if (t->has_red()) throw ShapeError("mast is defined for white-only shapes");
    if (t->arity() != 2) throw ShapeError("mast is defined for binary shapes");
  }
  detail::FlatTree a(t1);
  detail::FlatTree b(t2);
  const int nb = b.size();
  std::vector<int> memo(static_cast<std::size_t>(a.size()) * nb, -1);
  std::function<int(int, int)> m = [&](int u, int v) -> int {
    int& slot = memo[static_cast<std::size_t>(u) * nb + v];
    if (slot >= 0) return slot;
    const auto& un = a.nodes[u];
    const auto& vn = b.nodes[v];
    int best = 1;
    if (!un.is_leaf() && !vn.is_leaf()) {
      const int u1 = un.children[0], u2 = un.children[1];
      const int v1 = vn.children[0], v2 = vn.children[1];
      best = std::max({m(u, v1), m(u, v2), m(u1, v), m(u2, v), m(u1, v1) + m(u2, v2),
                       m(u1, v2) + m(u2, v1)});
    }
    slot = best;
    return best;
  };
  return m(0, 0);
}

std::int64_t jellyfish_mast(JellyfishSpec s1, JellyfishSpec s2) {
  if (s1.ell < 2 || s2.ell < 2 || s1.h < 0 || s2.h < 0) {
    throw ShapeError("jellyfish_mast: invalid jellyfish parameters");
  }
  if (s1.h > s2.h) std::swap(s1, s2);
  const std::int64_t m = std::min(s1.h + s1.ell - 1, s2.h + s2.ell - 1);
  return (std::int64_t{1} << s1.h) * (m + 1 - s1.h);
}

}  // namespace utk
