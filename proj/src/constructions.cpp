#include "utk/constructions.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "utk/labeled.hpp"

namespace utk {

CoeffSequences coefficient_sequences(int k_max, int d) {
  if (k_max < 1) throw std::invalid_argument("coefficient_sequences needs k_max >= 1");
  if (d < 2) throw std::invalid_argument("coefficient_sequences needs d >= 2");
  CoeffSequences s;
  s.d = d;
  BigInt a = 1;
  BigInt b = d;
  for (int k = 1; k <= k_max; ++k) {
    s.a.push_back(a);
    s.b.push_back(b);
    s.c.push_back(2 * a + b);
    BigInt next_a = 3 * a + b;
    BigInt next_b = (2 * d - 2) * a + d * b;
    a = next_a;
    b = next_b;
  }
  return s;
}

SVec svec(int k) {
  if (k < 0 || k > 40) throw std::invalid_argument("svec needs 0 <= k <= 40");
  SVec s;
  s.k = k;
  s.terms = {1};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::int64_t> next = s.terms;
    next.push_back(std::int64_t{1} << j);
    next.insert(next.end(), s.terms.begin(), s.terms.end());
    s.terms = std::move(next);
  }
  return s;
}

namespace {

// b sums to exactly 2^k. Appends indices (1-based, shifted by offset).
void place(const std::vector<std::int64_t>& b, int k, std::size_t offset,
           std::vector<std::size_t>& out) {
  if (k == 0) {
    out.push_back(offset + 1);
    return;
  }
  const std::int64_t half = std::int64_t{1} << (k - 1);
  std::size_t pivot = 0;
  std::int64_t prefix = 0;
  for (; pivot < b.size(); ++pivot) {
    prefix += b[pivot];
    if (prefix > half) break;
  }
  auto side = [&](std::vector<std::int64_t> part, std::size_t shift) {
    if (part.empty()) return;
    const std::int64_t sum = std::accumulate(part.begin(), part.end(), std::int64_t{0});
    const bool padded = sum < half;
    if (padded) part.push_back(half - sum);
    std::vector<std::size_t> idx;
    place(part, k - 1, shift, idx);
    if (padded) idx.pop_back();
    out.insert(out.end(), idx.begin(), idx.end());
  };
  side({b.begin(), b.begin() + static_cast<std::ptrdiff_t>(pivot)}, offset);
  out.push_back(offset + (std::size_t{1} << k));
  side({b.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, b.end()}, offset + (std::size_t{1} << k));
}

}  // namespace

std::vector<std::size_t> embed_composition(std::span<const std::int64_t> b, int k) {
  if (k < 0 || k > 40) throw std::invalid_argument("embed_composition needs 0 <= k <= 40");
  std::int64_t sum = 0;
  for (auto x : b) {
    if (x <= 0) throw std::invalid_argument("composition terms must be positive");
    sum += x;
  }
  if (sum != (std::int64_t{1} << k)) {
    throw std::invalid_argument("composition does not sum to 2^" + std::to_string(k));
  }
  std::vector<std::size_t> out;
  place({b.begin(), b.end()}, k, 0, out);
  return out;
}

UniversalBuilder::UniversalBuilder(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("UniversalBuilder needs d >= 2");
}

Shape UniversalBuilder::universal(int n) { return get(n, false).shape; }
Shape UniversalBuilder::redleaf(int n) { return get(n, true).shape; }

void UniversalBuilder::inject(int n, Shape s) {
  if (s.has_red() || s.white_leaves() < n) throw ShapeError("injected shape cannot be n-universal");
  std::unique_lock lock(mutex_);
  memo_[{false, n}] = Entry{s.with_arity(d_), "injected", {}};
}

void UniversalBuilder::inject_redleaf(int n, Shape s) {
  if (!s.has_red() || s.white_leaves() < n) {
    throw ShapeError("injected redleaf shape cannot be n-universal");
  }
  std::unique_lock lock(mutex_);
  memo_[{true, n}] = Entry{s.with_arity(d_), "injected", {}};
}

const UniversalBuilder::Entry& UniversalBuilder::get(int n, bool redleaf) {
  if (n < 1) throw std::invalid_argument("universal constructions need n >= 1");
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find({redleaf, n});
    if (it != memo_.end()) return it->second;
  }
  Entry e = build(n, redleaf);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace({redleaf, n}, std::move(e)).first->second;
}

UniversalBuilder::Entry UniversalBuilder::build(int n, bool redleaf) {
  const Shape white = make_leaf(Color::white, d_);
  if (n == 1) {
    if (!redleaf) return Entry{white, "base", {}};
    return Entry{join(white, make_leaf(Color::red, d_)), "base", {}};
  }
  const int h = n / 2;
  Entry e;
  e.source = "recursion";
  std::vector<Shape> parts;
  e.parts.emplace_back(true, h);
  if (!redleaf) {
    for (int i = 0; i < d_; ++i) {
      parts.push_back(universal(h));
      e.parts.emplace_back(false, h);
    }
  } else {
    parts.push_back(this->redleaf(h));
    e.parts.emplace_back(true, h);
    parts.push_back(universal(n));
    e.parts.emplace_back(false, n);
    for (int i = 0; i < d_ - 2; ++i) {
      parts.push_back(universal(h));
      e.parts.emplace_back(false, h);
    }
  }
  e.shape = graft(this->redleaf(h), join(std::move(parts)));
  return e;
}

nlohmann::json UniversalBuilder::trace(int n, bool redleaf) {
  nlohmann::json entries = nlohmann::json::array();
  std::map<std::pair<bool, int>, bool> seen;
  std::vector<std::pair<bool, int>> stack{{redleaf, n}};
  while (!stack.empty()) {
    auto key = stack.back();
    stack.pop_back();
    if (seen[key]) continue;
    seen[key] = true;
    const Entry& e = get(key.second, key.first);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [red, m] : e.parts) {
      parts.push_back({{"kind", red ? "redleaf" : "universal"}, {"n", m}});
      stack.emplace_back(red, m);
    }
    entries.push_back({{"kind", key.first ? "redleaf" : "universal"},
                       {"n", key.second},
                       {"d", d_},
                       {"source", e.source},
                       {"white_leaves", e.shape.white_leaves()},
                       {"rule", e.source != "recursion" ? ""
                                : key.first ? "U1(h)[(+)(U1(h), U(n), U(h) x (d-2))]"
                                            : "U1(h)[(+)(U(h) x d)]"},
                       {"parts", parts}});
  }
  return entries;
}

Shape build_universal(int n, int d) {
  UniversalBuilder b(d);
  return b.universal(n);
}

Shape build_universal_redleaf(int n, int d) {
  UniversalBuilder b(d);
  return b.redleaf(n);
}

namespace {

struct SizePair {
  std::int64_t plain = 1;
  std::int64_t red = 1;
};

SizePair sizes(int n, int d, std::map<int, SizePair>& memo) {
  if (n < 1) throw std::invalid_argument("universal sizes need n >= 1");
  if (n == 1) return {};
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const SizePair half = sizes(n / 2, d, memo);
  SizePair s;
  s.plain = half.red + d * half.plain;
  s.red = 2 * half.red + s.plain + (d - 2) * half.plain;
  memo[n] = s;
  return s;
}

}  // namespace

std::int64_t universal_size(int n, int d) {
  std::map<int, SizePair> memo;
  return sizes(n, d, memo).plain;
}

std::int64_t universal_redleaf_size(int n, int d) {
  std::map<int, SizePair> memo;
  return sizes(n, d, memo).red;
}

Shape build_redleaf_comb(int k, UniversalBuilder& parts) {
  if (k < 0) throw std::invalid_argument("build_redleaf_comb needs k >= 0");
  const int d = parts.arity();
  const SVec s = svec(k);
  Shape acc = make_leaf(Color::red, d);
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
    Shape u = parts.universal(static_cast<int>(*it));
    Shape r = d == 2 ? u : join(std::vector<Shape>(static_cast<std::size_t>(d - 1), u));
    acc = join(r, acc);
  }
  return acc;
}

Shape build_redleaf_comb(int k, int d) {
  UniversalBuilder b(d);
  return build_redleaf_comb(k, b);
}

Tanglegram build_universal_tanglegram(const Shape& u) {
  if (u.has_red()) throw ShapeError("universal tanglegram needs a white-only shape");
  const int m = u.white_leaves();
  const Shape small = caterpillar(m, u.arity());

  // U with a labeled caterpillar at every leaf; leaf j of small tree i gets
  // label i*m + j.
  auto expand = [&](const LabeledTree& base) {
    std::function<LabeledTree(const LabeledTree&)> go = [&](const LabeledTree& t) {
      if (!t.is_leaf()) {
        LabeledTree out;
        for (const auto& c : t.children) out.children.push_back(go(c));
        return out;
      }
      LabeledTree hung = to_labeled(small);
      std::function<void(LabeledTree&)> relabel = [&](LabeledTree& x) {
        if (x.is_leaf()) x.label = t.label * m + x.label;
        for (auto& c : x.children) relabel(c);
      };
      relabel(hung);
      return hung;
    };
    return canonicalize(go(base), u.arity());
  };

  const LabeledTree base = to_labeled(u);
  LabeledShape left = expand(base);
  LabeledShape right = expand(base);

  std::vector<int> right_pos(static_cast<std::size_t>(m) * m);
  for (std::size_t p = 0; p < right.leaf_labels.size(); ++p) {
    right_pos[right.leaf_labels[p]] = static_cast<int>(p);
  }
  std::vector<int> matching(left.leaf_labels.size());
  for (std::size_t p = 0; p < left.leaf_labels.size(); ++p) {
    const int i = left.leaf_labels[p] / m;
    const int j = left.leaf_labels[p] % m;
    matching[p] = right_pos[j * m + i];
  }
  return make_tanglegram(std::move(left.shape), std::move(right.shape), std::move(matching));
}

Tanglegram build_universal_tanglegram(int n, int d) {
  return build_universal_tanglegram(build_universal(n, d));
}

}  // namespace utk
