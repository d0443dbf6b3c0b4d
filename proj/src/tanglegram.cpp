#include "utk/tanglegram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "utk/detail/parallel.hpp"
#include "utk/labeled.hpp"

namespace utk {

Tanglegram make_tanglegram(Shape left, Shape right, std::vector<int> matching) {
  if (left.has_red() || right.has_red()) throw ShapeError("tanglegram trees must be white-only");
  if (left.arity() != right.arity()) throw ShapeError("tanglegram trees have different arity bounds");
  if (left.leaf_count() != right.leaf_count()) throw ShapeError("tanglegram trees differ in size");
  if (static_cast<int>(matching.size()) != left.leaf_count()) {
    throw ShapeError("tanglegram matching has the wrong length");
  }
  std::vector<bool> seen(matching.size(), false);
  for (int m : matching) {
    if (m < 0 || m >= static_cast<int>(matching.size()) || seen[m]) {
      throw ShapeError("tanglegram matching is not a permutation");
    }
    seen[m] = true;
  }
  return Tanglegram{std::move(left), std::move(right), std::move(matching)};
}

namespace {

std::vector<int> least_matching(const std::vector<int>& sigma,
                                const std::vector<std::vector<int>>& left_auts,
                                const std::vector<std::vector<int>>& right_auts) {
  std::vector<int> best = sigma;
  std::vector<int> candidate(sigma.size());
  for (const auto& a : left_auts) {
    for (const auto& b : right_auts) {
      for (std::size_t i = 0; i < sigma.size(); ++i) candidate[a[i]] = b[sigma[i]];
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

std::string code_text(const Shape& l, const Shape& r, const std::vector<int>& m) {
  std::string out = l.code() + "|" + r.code() + "|";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(m[i]);
  }
  return out;
}

}  // namespace

TanglegramCode canonical_tanglegram(const Tanglegram& t) {
  auto best =
      least_matching(t.matching, leaf_automorphisms(t.left), leaf_automorphisms(t.right));
  return TanglegramCode{code_text(t.left, t.right, best)};
}

std::vector<Tanglegram> enumerate_tanglegrams(int n, int d, int threads) {
  if (n < 1) throw ShapeError("enumerate_tanglegrams needs n >= 1");
  const auto shapes = enumerate_shapes(n, d, false);
  const std::size_t k = shapes.size();
  std::vector<std::vector<Tanglegram>> per_pair(k * k);
  detail::parallel_for(k * k, threads, [&](std::size_t job) {
    const Shape& l = shapes[job / k];
    const Shape& r = shapes[job % k];
    const auto la = leaf_automorphisms(l);
    const auto ra = leaf_automorphisms(r);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      // sigma represents its class iff it is the least member of its orbit
      if (least_matching(sigma, la, ra) == sigma) per_pair[job].push_back(Tanglegram{l, r, sigma});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  });
  std::vector<std::pair<std::string, Tanglegram>> all;
  for (auto& bucket : per_pair) {
    for (auto& t : bucket) {
      auto text = code_text(t.left, t.right, t.matching);
      all.emplace_back(std::move(text), std::move(t));
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tanglegram> out;
  out.reserve(all.size());
  for (auto& [_, t] : all) out.push_back(std::move(t));
  return out;
}

Tanglegram induced_subtanglegram(const Tanglegram& t, const std::vector<int>& left_positions) {
  std::vector<int> right_positions;
  right_positions.reserve(left_positions.size());
  for (int p : left_positions) right_positions.push_back(t.matching.at(p));
  auto l = induce(t.left, left_positions);
  auto r = induce(t.right, right_positions);
  std::vector<int> right_rank(static_cast<std::size_t>(t.size()), -1);
  for (std::size_t i = 0; i < r.leaf_labels.size(); ++i) {
    right_rank[r.leaf_labels[i]] = static_cast<int>(i);
  }
  std::vector<int> m(l.leaf_labels.size());
  for (std::size_t i = 0; i < l.leaf_labels.size(); ++i) {
    m[i] = right_rank[t.matching[l.leaf_labels[i]]];
  }
  return Tanglegram{std::move(l.shape), std::move(r.shape), std::move(m)};
}

namespace {

// Visits every k-subset of {0..n-1} in lexicographic order until `visit`
// returns true.
bool any_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n || k < 1) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_induced_subtanglegram(const Tanglegram& small, const Tanglegram& big) {
  if (small.left.arity() != big.left.arity()) {
    throw ShapeError("subtanglegram test of tanglegrams with different arity bounds");
  }
  if (small.size() > big.size()) return false;
  const auto target = canonical_tanglegram(small);
  return any_subset(big.size(), small.size(), [&](const std::vector<int>& edges) {
    auto l = induce(big.left, edges);
    if (l.shape.code() != small.left.code()) return false;
    return canonical_tanglegram(induced_subtanglegram(big, edges)) == target;
  });
}

bool is_universal_tanglegram(const Tanglegram& t, int n) {
  if (t.size() < n) return false;
  std::set<TanglegramCode> missing;
  for (const auto& c : enumerate_tanglegrams(n, t.left.arity())) {
    missing.insert(canonical_tanglegram(c));
  }
  any_subset(t.size(), n, [&](const std::vector<int>& edges) {
    missing.erase(canonical_tanglegram(induced_subtanglegram(t, edges)));
    return missing.empty();
  });
  return missing.empty();
}

std::string format_tanglegram(const Tanglegram& t) {
  std::string out = to_newick(t.left) + "|" + to_newick(t.right) + "|";
  for (std::size_t i = 0; i < t.matching.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(t.matching[i]);
  }
  return out;
}

Tanglegram parse_tanglegram(std::string_view text, int arity) {
  const auto a = text.find('|');
  const auto b = a == std::string_view::npos ? a : text.find('|', a + 1);
  if (b == std::string_view::npos) throw ParseError("tanglegram text needs two '|' separators");
  Shape left = parse_shape(text.substr(0, a), arity);
  Shape right = parse_shape(text.substr(a + 1, b - a - 1), arity);
  std::istringstream in{std::string(text.substr(b + 1))};
  std::vector<int> m;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("tanglegram matching entry '" + tok + "' is not an integer");
    m.push_back(v);
  }
  try {
    return make_tanglegram(std::move(left), std::move(right), std::move(m));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string tanglegram_to_dot(const Tanglegram& t) {
  int next = 0;
  std::function<std::string(const Shape&, const std::string&, bool, std::ostringstream&,
                            std::vector<std::string>&)>
      emit = [&](const Shape& s, const std::string& side, bool root, std::ostringstream& out,
                 std::vector<std::string>& leaves) {
        std::string id = side + std::to_string(next++);
        out << "    " << id << " [shape=" << (root ? "box" : s.is_leaf() ? "circle" : "point")
            << "];\n";
        if (s.is_leaf()) leaves.push_back(id);
        for (const auto& c : s.children()) {
          auto child = emit(c, side, false, out, leaves);
          out << "    " << id << " -- " << child << ";\n";
        }
        return id;
      };
  std::ostringstream left;
  std::ostringstream right;
  std::vector<std::string> left_leaves;
  std::vector<std::string> right_leaves;
  emit(t.left, "L", true, left, left_leaves);
  emit(t.right, "R", true, right, right_leaves);

  std::ostringstream out;
  out << "graph tanglegram {\n  rankdir=LR;\n  node [label=\"\"];\n";
  out << "  subgraph cluster_left {\n    style=invis;\n" << left.str() << "  }\n";
  out << "  subgraph cluster_right {\n    style=invis;\n" << right.str() << "  }\n";
  for (std::size_t i = 0; i < t.matching.size(); ++i) {
    out << "  " << left_leaves[i] << " -- " << right_leaves[t.matching[i]]
        << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace utk
