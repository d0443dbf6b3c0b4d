#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "utk/labeled.hpp"
#include "utk/tanglegram.hpp"

using namespace utk;

namespace {

std::string oracle_key(const Tanglegram& t) {
  auto [l, r] = oracle::tangle_trees(t.left.code(), t.right.code(), t.matching);
  return oracle::tangle_key(l, r);
}

// Tanglegram from two labeled trees; leaves with equal labels are matched.
Tanglegram from_labeled(const LabeledTree& l, const LabeledTree& r) {
  auto ls = canonicalize(l, 2);
  auto rs = canonicalize(r, 2);
  std::vector<int> pos(rs.leaf_labels.size());
  for (std::size_t i = 0; i < rs.leaf_labels.size(); ++i) pos[rs.leaf_labels[i]] = static_cast<int>(i);
  std::vector<int> m;
  for (int label : ls.leaf_labels) m.push_back(pos[label]);
  return make_tanglegram(ls.shape, rs.shape, m);
}

LabeledTree lf(int label) { return LabeledTree{Color::white, label, {}}; }
LabeledTree nd(LabeledTree a, LabeledTree b) { return LabeledTree{Color::white, -1, {a, b}}; }

}  // namespace

TEST_CASE("make_tanglegram validates") {
  const Shape c2 = caterpillar(2);
  CHECK_NOTHROW(make_tanglegram(c2, c2, {1, 0}));
  CHECK_THROWS_AS(make_tanglegram(c2, c2, {0, 0}), ShapeError);
  CHECK_THROWS_AS(make_tanglegram(c2, c2, {0}), ShapeError);
  CHECK_THROWS_AS(make_tanglegram(c2, caterpillar(3), {0, 1}), ShapeError);
  CHECK_THROWS_AS(make_tanglegram(join(make_leaf(Color::white), make_leaf(Color::red)), c2, {0, 1}),
                  ShapeError);
}

TEST_CASE("canonical_tanglegram") {
  const Shape w = make_leaf(Color::white);
  CHECK(canonical_tanglegram(make_tanglegram(w, w, {0})).text == "o|o|0");
  const Shape c2 = caterpillar(2);
  CHECK(canonical_tanglegram(make_tanglegram(c2, c2, {0, 1})) ==
        canonical_tanglegram(make_tanglegram(c2, c2, {1, 0})));
  // left and right play different roles
  const auto t = make_tanglegram(complete(2), caterpillar(4), {0, 1, 2, 3});
  const auto swapped = make_tanglegram(caterpillar(4), complete(2), {0, 1, 2, 3});
  CHECK(canonical_tanglegram(t) != canonical_tanglegram(swapped));
}

TEST_CASE("enumerate_tanglegrams counts match labeled oracle") {
  const std::size_t expect[] = {0, 1, 1, 2, 13};
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_tanglegrams(n);
    CHECK(all.size() == expect[n]);
    CHECK(oracle::tanglegram_classes(n).size() == expect[n]);
    std::set<std::string> keys;
    for (const auto& t : all) {
      CHECK(t.left.white_leaves() == n);
      CHECK(t.right.white_leaves() == n);
      keys.insert(oracle_key(t));
    }
    CHECK(keys == oracle::tanglegram_classes(n));
  }
  CHECK(enumerate_tanglegrams(4, 2, 4).size() == 13);
}

TEST_CASE("canonical codes partition raw tanglegrams like the oracle (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::string, std::string> code_to_key;
    std::map<std::string, std::string> key_to_code;
    for (const auto& l : enumerate_shapes(n)) {
      for (const auto& r : enumerate_shapes(n)) {
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
          const auto t = make_tanglegram(l, r, sigma);
          const auto code = canonical_tanglegram(t).text;
          const auto k = oracle_key(t);
          auto [a, fa] = code_to_key.emplace(code, k);
          CHECK(a->second == k);
          auto [b, fb] = key_to_code.emplace(k, code);
          CHECK(b->second == code);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
    }
  }
}

TEST_CASE("count growth trend") {
  std::vector<double> t;
  for (int n = 1; n <= 6; ++n) t.push_back(static_cast<double>(enumerate_tanglegrams(n, 2, 4).size()));
  for (std::size_t i = 2; i + 1 < t.size(); ++i) CHECK(t[i + 1] / t[i] > t[i] / t[i - 1]);
}

TEST_CASE("induced subtanglegram from the figure") {
  // e1, e2, e3 are labels 0, 1, 2
  const auto big = from_labeled(nd(nd(lf(0), lf(1)), nd(lf(2), nd(lf(3), lf(4)))),
                                nd(nd(nd(lf(0), lf(1)), lf(2)), nd(lf(3), lf(4))));
  const auto small = from_labeled(nd(nd(lf(0), lf(1)), lf(2)), nd(nd(lf(0), lf(1)), lf(2)));
  const auto labeled = canonicalize(nd(nd(lf(0), lf(1)), nd(lf(2), nd(lf(3), lf(4)))), 2);
  std::vector<int> edges;
  for (std::size_t i = 0; i < labeled.leaf_labels.size(); ++i) {
    if (labeled.leaf_labels[i] <= 2) edges.push_back(static_cast<int>(i));
  }
  CHECK(canonical_tanglegram(induced_subtanglegram(big, edges)) == canonical_tanglegram(small));
  CHECK(is_induced_subtanglegram(small, big));
}

TEST_CASE("subtanglegram agrees with subset oracle (small <= 3, big <= 4)") {
  std::vector<Tanglegram> smalls;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_tanglegrams(n)) smalls.push_back(t);
  }
  std::vector<Tanglegram> bigs = smalls;
  for (const auto& t : enumerate_tanglegrams(4)) bigs.push_back(t);
  for (const auto& s : smalls) CHECK(is_induced_subtanglegram(s, s));
  for (const auto& b : bigs) {
    auto [bl, br] = oracle::tangle_trees(b.left.code(), b.right.code(), b.matching);
    for (const auto& s : smalls) {
      const bool expect =
          s.size() <= b.size() && oracle::sub_tangle_keys(bl, br, s.size()).count(oracle_key(s)) > 0;
      CHECK(is_induced_subtanglegram(s, b) == expect);
    }
  }
}

TEST_CASE("subtanglegram transitivity") {
  std::vector<Tanglegram> all;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_tanglegrams(n)) all.push_back(t);
  }
  std::mt19937 rng(5);
  int chains = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    if (is_induced_subtanglegram(a, b) && is_induced_subtanglegram(b, c)) {
      ++chains;
      CHECK(is_induced_subtanglegram(a, c));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("is_universal_tanglegram") {
  const Shape c2 = caterpillar(2);
  CHECK(is_universal_tanglegram(make_tanglegram(c2, c2, {0, 1}), 2));
  CHECK(is_universal_tanglegram(make_tanglegram(make_leaf(Color::white), make_leaf(Color::white), {0}), 1));
  // a single size-3 tanglegram misses the other class
  const auto three = enumerate_tanglegrams(3);
  for (const auto& t : three) CHECK_FALSE(is_universal_tanglegram(t, 3));
  CHECK_FALSE(is_universal_tanglegram(make_tanglegram(c2, c2, {0, 1}), 3));
}

TEST_CASE("text and dot formats") {
  const auto t = make_tanglegram(caterpillar(3), caterpillar(3), {2, 0, 1});
  const auto text = format_tanglegram(t);
  CHECK(text == to_newick(caterpillar(3)) + "|" + to_newick(caterpillar(3)) + "|2 0 1");
  const auto back = parse_tanglegram(text);
  CHECK(back.left == t.left);
  CHECK(back.right == t.right);
  CHECK(back.matching == t.matching);
  CHECK_THROWS_AS(parse_tanglegram("(x,x);|(x,x);"), ParseError);
  CHECK_THROWS_AS(parse_tanglegram("(x,x);|(x,x);|0 0"), ParseError);
  CHECK_THROWS_AS(parse_tanglegram("(x,x);|(x,x);|0 a"), ParseError);
  const auto dot = tanglegram_to_dot(t);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("cluster_left") != std::string::npos);
}
