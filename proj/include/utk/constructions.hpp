#pragma once

// Provably universal objects: the recursive centroid constructions for
// ordinary and redleaf trees (binary and d-ary), the comb built from the
// doubling sequence s_k, and the product-style universal tanglegram.

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "utk/shape.hpp"
#include "utk/tanglegram.hpp"

namespace utk {

using BigInt = boost::multiprecision::cpp_int;

/// a_1 = 1, b_1 = 2, a_{k+1} = 3a_k + b_k, b_{k+1} = 2a_k + 2b_k.
/// For d > 2 the d-ary variants A, B (A_1 = 1, B_1 = d,
/// A_{k+1} = 3A_k + B_k, B_{k+1} = (2d-2)A_k + dB_k) and C_k = 2A_k + B_k.
/// For d = 2 the two families coincide (a = A, b = B).
struct CoeffSequences {
  int d = 2;
  std::vector<BigInt> a;  // index k-1 holds the k-th term
  std::vector<BigInt> b;
  std::vector<BigInt> c;
};

CoeffSequences coefficient_sequences(int k_max, int d = 2);

/// The doubling sequence s_k = s_{k-1}, 2^k, s_{k-1}; s_0 = (1).
struct SVec {
  int k = 0;
  std::vector<std::int64_t> terms;  // terms[i-1] = s_{i,k}

  std::int64_t at(std::size_t one_based) const { return terms.at(one_based - 1); }
};

SVec svec(int k);

/// Strictly increasing 1-based indices a_1 < ... < a_l into s_k with
/// b_i <= s_{a_i,k}, for a composition b of 2^k. The first prefix of b that
/// exceeds 2^{k-1} is placed on the middle term 2^k; both sides recurse into
/// s_{k-1} after padding to 2^{k-1} with one extra term.
std::vector<std::size_t> embed_composition(std::span<const std::int64_t> b, int k);

/// Memoized builder for U(n) (ordinary) and U1(n) (redleaf) at arity d:
///   U(1)  = white leaf,   U(n)  = U1(h)[ (+)(U(h) x d) ]
///   U1(1) = (white, red), U1(n) = U1(h)[ (+)(U1(h), U(n), U(h) x (d-2)) ]
/// with h = floor(n/2). Minimal shapes (e.g. from the search) may be
/// injected and then replace the recursive ones wherever they are needed.
/// Thread-safe.
class UniversalBuilder {
 public:
  explicit UniversalBuilder(int d = 2);

  int arity() const { return d_; }

  Shape universal(int n);
  Shape redleaf(int n);

  void inject(int n, Shape s);
  void inject_redleaf(int n, Shape s);

  /// Provenance of U(n) (or U1(n)) and everything it was assembled from.
  nlohmann::json trace(int n, bool redleaf);

 private:
  struct Entry {
    Shape shape;
    std::string source;  // "base", "injected", "recursion"
    std::vector<std::pair<bool, int>> parts;  // (redleaf, n) of stump then joined parts
  };

  const Entry& get(int n, bool redleaf);
  Entry build(int n, bool redleaf);

  int d_;
  std::shared_mutex mutex_;
  std::map<std::pair<bool, int>, Entry> memo_;
};

Shape build_universal(int n, int d = 2);
Shape build_universal_redleaf(int n, int d = 2);

/// Sizes of the recursive constructions without building them.
std::int64_t universal_size(int n, int d = 2);
std::int64_t universal_redleaf_size(int n, int d = 2);

/// R_1 (+) (R_2 (+) ( ... (R_{2^{k+1}-1} (+) Q))), Q the red leaf, where R_i
/// joins d-1 copies of the builder's s_{i,k}-universal shape (R_i is that
/// shape itself when d = 2).
Shape build_redleaf_comb(int k, UniversalBuilder& parts);
Shape build_redleaf_comb(int k, int d = 2);

/// Two copies of `u` with a caterpillar C_{|u|} hung at every leaf; left
/// small tree i sends its j-th leaf to right small tree j (its i-th leaf).
/// Size |u|^2.
Tanglegram build_universal_tanglegram(const Shape& u);
Tanglegram build_universal_tanglegram(int n, int d = 2);

}  // namespace utk
