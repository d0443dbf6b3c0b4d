#include "doctest.h"
#include "utk/bounds.hpp"
#include "utk/search.hpp"

using namespace utk;

TEST_CASE("naive_upper") {
  const int expect[] = {0, 1, 2, 3, 5, 7, 10, 13, 18};
  for (int n = 1; n <= 8; ++n) CHECK(naive_upper(n) == expect[n]);
  for (int n = 2; n <= 200; ++n) CHECK(naive_upper(n) > naive_upper(n - 1));
  for (int n = 1; n <= 200; ++n) CHECK(naive_upper(n) >= quad_upper(n) - n * n);
  CHECK_THROWS(naive_upper(0));
}

TEST_CASE("quad_upper") {
  CHECK(quad_upper(1) == 1);
  CHECK(quad_upper(2) == 3);
  CHECK(quad_upper(4) == 11);
  CHECK(quad_upper(8) == 43);
  CHECK(quad_upper(1000000) == BigInt("666666666667"));
}

TEST_CASE("chung_lower") {
  const auto c2 = chung_lower(2);
  CHECK(c2.simplified_exact == Rational(8, 3));
  CHECK(c2.simplified == 3);
  const auto c3 = chung_lower(3);
  CHECK(c3.simplified_exact == Rational(8));
  CHECK(c3.simplified == 8);
  CHECK(c2.raw == 5);
  CHECK(c3.raw == 11);
  CHECK(c2.raw <= known_u(4)->value);
  CHECK(c3.raw <= known_u(8)->value);
  for (int k = 2; k <= 12; ++k) {
    const auto c = chung_lower(k);
    CHECK(c.mast_sum < BigInt(k) * (BigInt(1) << k));
    CHECK(c.raw >= c.simplified);
  }
  CHECK_THROWS(chung_lower(1));
  CHECK_THROWS(chung_lower(61));
}

TEST_CASE("kalmar") {
  const int expect[] = {0, 1, 2, 3, 5, 6, 9, 10, 14, 16, 19, 20, 28};
  for (int n = 1; n <= 12; ++n) CHECK(kalmar(n) == expect[n]);
  for (int m = 2; m <= 60; ++m) CHECK(kalmar(m) - kalmar(m - 1) == ordered_factorizations(m));
  CHECK(ordered_factorizations(1) == 1);
  CHECK(ordered_factorizations(12) == 8);
  CHECK(ordered_factorizations(16) == 8);
  // primes contribute one factorization each
  CHECK(ordered_factorizations(97) == 1);
}

TEST_CASE("known u against kalmar") {
  for (int n = 1; n <= 10; ++n) CHECK(kalmar(n) == known_u(n)->value);
  CHECK(known_u(11)->value == 21);
  CHECK(kalmar(11) == 20);
  CHECK_FALSE(known_u(12)->exact);
  CHECK_FALSE(known_u(13).has_value());
}

TEST_CASE("binomial and tangle_lower") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(tangle_lower(2, 1) == 2);
  const auto q = tangle_lower(4, 13);
  CHECK(binomial(q, 4) >= 13);
  CHECK(binomial(q - 1, 4) < 13);
  CHECK(q == 6);
  CHECK_THROWS(tangle_lower(2, 0));
}

TEST_CASE("bound table") {
  const auto rows = bound_table(1, 12);
  REQUIRE(rows.size() == 12);
  CHECK_FALSE(rows[2].chung_lower.has_value());
  CHECK(*rows[3].chung_lower == 5);
  CHECK(*rows[7].chung_lower == 11);
  const auto text = format_bound_table_text(rows);
  CHECK(text.find("<=28") != std::string::npos);
  CHECK(text.find("chung_lower") != std::string::npos);
  const auto csv = format_bound_table_csv(rows);
  CHECK(csv.rfind("n,u_known,naive_upper,quad_upper,chung_lower,kalmar\n", 0) == 0);
  CHECK(csv.find("\n4,5,5,11,5,5\n") != std::string::npos);
  const auto j = bound_table_json(rows);
  CHECK(j.size() == 12);
  CHECK(j[7]["quad_upper"] == "43");
  CHECK(j[11]["u_known"]["exact"] == false);
  CHECK(j[0]["chung_lower"].is_null());
  CHECK_THROWS(bound_table(3, 2));
}
