#pragma once

// Exact evaluation of the numeric bounds on u(n) and q(n).

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace utk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// N(1) = 1, N(n) = N(n-1) + N(floor(n/2)).
BigInt naive_upper(int n);

/// floor((2n^2 + 1) / 3).
BigInt quad_upper(int n);

/// Lower bound on u(2^k) from Chung's inequality with l = 2 applied to the
/// jellyfish family T_i = J_{i-1, 2^{k-i+1}}, i = 1..k.
struct ChungBound {
  int k = 0;
  BigInt mast_sum;         // sum over i < j of mast(T_i, T_j)
  Rational raw_exact;      // (2k 2^k - mast_sum) / 3
  BigInt raw;              // ceiling of raw_exact
  Rational simplified_exact;  // k 2^k / 3
  BigInt simplified;       // ceiling of simplified_exact
};

ChungBound chung_lower(int k);

/// Number of ordered factorizations of m (f(1) = 1, f(m) = sum of f(d) over
/// proper divisors d of m).
BigInt ordered_factorizations(int m);

/// Partial sums of ordered_factorizations.
BigInt kalmar(int n);

/// Smallest q with binom(q, n) >= t_n.
BigInt tangle_lower(int n, const BigInt& t_n);

BigInt binomial(const BigInt& q, int n);

/// Published values of u(n): exact for n <= 11, an upper bound at n = 12.
struct KnownU {
  int value = 0;
  bool exact = true;
};

std::optional<KnownU> known_u(int n);

struct BoundRow {
  int n = 0;
  std::optional<KnownU> u_known;
  BigInt naive_upper;
  BigInt quad_upper;
  std::optional<BigInt> chung_lower;  // only at n = 2^k, k >= 2
  BigInt kalmar;
};

std::vector<BoundRow> bound_table(int from, int to);

std::string format_bound_table_text(const std::vector<BoundRow>& rows);
std::string format_bound_table_csv(const std::vector<BoundRow>& rows);
nlohmann::json bound_table_json(const std::vector<BoundRow>& rows);

}  // namespace utk
