#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "utk/embedding.hpp"

using namespace utk;

namespace {

std::vector<Shape> shapes_up_to(int n, int d, bool red) {
  std::vector<Shape> out;
  for (int m = red ? 0 : 1; m <= n; ++m) {
    for (const auto& s : enumerate_shapes(m, d, red)) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("is_induced_subtree examples") {
  CHECK(is_induced_subtree(caterpillar(3), complete(2)));
  CHECK_FALSE(is_induced_subtree(caterpillar(4), complete(2)));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_shapes(n)) CHECK(is_induced_subtree(s, s));
    for (const auto& s : enumerate_shapes(n, 2, true)) CHECK(is_induced_subtree(s, s));
  }
  CHECK_THROWS(is_induced_subtree(caterpillar(2), caterpillar(2, 3)));
}

TEST_CASE("embedding agrees with subset oracle (pattern <= 4, host <= 6)") {
  for (int d : {2, 3}) {
    const auto patterns = [&] {
      auto p = shapes_up_to(4, d, false);
      for (const auto& s : shapes_up_to(3, d, true)) p.push_back(s);
      return p;
    }();
    const auto hosts = [&] {
      auto h = shapes_up_to(d == 2 ? 6 : 5, d, false);
      for (const auto& s : shapes_up_to(d == 2 ? 5 : 4, d, true)) h.push_back(s);
      return h;
    }();
    int checked = 0;
    for (const auto& h : hosts) {
      const auto ht = oracle::parse(h.code());
      for (const auto& p : patterns) {
        const bool expect = oracle::embeds(oracle::parse(p.code()), ht);
        INFO(p.code() << " in " << h.code());
        CHECK(is_induced_subtree(p, h) == expect);
        ++checked;
      }
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("embedding transitivity and monotonicity") {
  const auto all = shapes_up_to(6, 2, false);
  std::mt19937 rng(3);
  int chains = 0;
  for (int i = 0; i < 3000; ++i) {
    const Shape& a = all[rng() % all.size()];
    const Shape& b = all[rng() % all.size()];
    const Shape& c = all[rng() % all.size()];
    const bool ab = is_induced_subtree(a, b);
    if (ab) {
      CHECK(a.white_leaves() <= b.white_leaves());
      CHECK(a.height() <= b.height());
    }
    if (ab && is_induced_subtree(b, c)) {
      ++chains;
      CHECK(is_induced_subtree(a, c));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("mast examples") {
  CHECK(mast(caterpillar(4), complete(2)) == 3);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_shapes(n)) CHECK(mast(s, s) == n);
  }
  CHECK_THROWS(mast(join(make_leaf(Color::white), make_leaf(Color::red)), caterpillar(2)));
  CHECK_THROWS(mast(caterpillar(3, 3), caterpillar(3, 3)));
}

TEST_CASE("mast agrees with subset oracle up to 5 leaves") {
  const auto all = shapes_up_to(5, 2, false);
  for (const auto& a : all) {
    const auto at = oracle::parse(a.code());
    for (const auto& b : all) CHECK(mast(a, b) == oracle::mast(at, oracle::parse(b.code())));
  }
}

TEST_CASE("mast properties up to 6 leaves") {
  const auto all = shapes_up_to(6, 2, false);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const int m = mast(a, b);
      CHECK(m >= 1);
      CHECK(m == mast(b, a));
      CHECK((m == a.white_leaves()) == is_induced_subtree(a, b));
    }
  }
}

TEST_CASE("jellyfish_mast") {
  CHECK(jellyfish_mast({1, 4}, {2, 2}) == 6);
  CHECK(jellyfish_mast({2, 2}, {1, 4}) == 6);
  for (int h = 0; h <= 3; ++h) {
    for (int l = 2; l <= 5; ++l) CHECK(jellyfish_mast({h, l}, {h, l}) == (std::int64_t{1} << h) * l);
  }
  for (int h1 = 0; h1 <= 3; ++h1) {
    for (int h2 = 0; h2 <= 3; ++h2) {
      for (int l1 = 2; l1 <= 5; ++l1) {
        for (int l2 = 2; l2 <= 5; ++l2) {
          CHECK(jellyfish_mast({h1, l1}, {h2, l2}) == mast(jellyfish({h1, l1}), jellyfish({h2, l2})));
        }
      }
    }
  }
}

TEST_CASE("EmbedTable subproblems") {
  EmbedTable t(caterpillar(3), complete(3));
  CHECK(t.contains());
  CHECK(t.entries() > 0);
}
