#include "utk/bounds.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "utk/embedding.hpp"

namespace utk {

namespace {

BigInt ceil_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) ++q;
  return q;
}

}  // namespace

BigInt naive_upper(int n) {
  if (n < 1) throw std::invalid_argument("naive_upper needs n >= 1");
  std::vector<BigInt> v(static_cast<std::size_t>(n) + 1);
  v[1] = 1;
  for (int m = 2; m <= n; ++m) v[m] = v[m - 1] + v[m / 2];
  return v[n];
}

BigInt quad_upper(int n) {
  if (n < 1) throw std::invalid_argument("quad_upper needs n >= 1");
  BigInt nn = n;
  return (2 * nn * nn + 1) / 3;
}

ChungBound chung_lower(int k) {
  if (k < 2 || k > 60) throw std::invalid_argument("chung_lower needs 2 <= k <= 60");
  ChungBound c;
  c.k = k;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      JellyfishSpec ti{i - 1, 0};
      JellyfishSpec tj{j - 1, 0};
      // ell = 2^{k-i+1} can overflow int only far beyond k = 60
      ti.ell = static_cast<int>(std::min<std::int64_t>(std::int64_t{1} << (k - i + 1), 1 << 30));
      tj.ell = static_cast<int>(std::min<std::int64_t>(std::int64_t{1} << (k - j + 1), 1 << 30));
      c.mast_sum += jellyfish_mast(ti, tj);
    }
  }
  const BigInt pow2 = BigInt(1) << k;
  c.raw_exact = Rational(2 * k * pow2 - c.mast_sum, 3);
  c.raw = ceil_of(c.raw_exact);
  c.simplified_exact = Rational(k * pow2, 3);
  c.simplified = ceil_of(c.simplified_exact);
  if (c.raw < c.simplified) throw std::logic_error("chung_lower: evaluated bound below simplified bound");
  return c;
}

BigInt ordered_factorizations(int m) {
  if (m < 1) throw std::invalid_argument("ordered_factorizations needs m >= 1");
  std::vector<BigInt> f(static_cast<std::size_t>(m) + 1, 0);
  f[1] = 1;
  // push each f(d) to its proper multiples
  for (int d = 1; d <= m; ++d) {
    for (int x = 2 * d; x <= m; x += d) f[x] += f[d];
  }
  return f[m];
}

BigInt kalmar(int n) {
  if (n < 1) throw std::invalid_argument("kalmar needs n >= 1");
  std::vector<BigInt> f(static_cast<std::size_t>(n) + 1, 0);
  f[1] = 1;
  for (int d = 1; d <= n; ++d) {
    for (int x = 2 * d; x <= n; x += d) f[x] += f[d];
  }
  BigInt total = 0;
  for (int m = 1; m <= n; ++m) total += f[m];
  return total;
}

BigInt binomial(const BigInt& q, int n) {
  if (n < 0 || q < n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r = r * (q - n + i) / i;
  return r;
}

BigInt tangle_lower(int n, const BigInt& t_n) {
  if (n < 1) throw std::invalid_argument("tangle_lower needs n >= 1");
  if (t_n < 1) throw std::invalid_argument("tangle_lower needs t_n >= 1");
  BigInt q = n;
  while (binomial(q, n) < t_n) ++q;
  return q;
}

std::optional<KnownU> known_u(int n) {
  static constexpr int table[] = {0, 1, 2, 3, 5, 6, 9, 10, 14, 16, 19, 21, 28};
  if (n < 1 || n > 12) return std::nullopt;
  return KnownU{table[n], n <= 11};
}

std::vector<BoundRow> bound_table(int from, int to) {
  if (from < 1 || to < from) throw std::invalid_argument("bound_table needs 1 <= from <= to");
  std::vector<BoundRow> rows;
  for (int n = from; n <= to; ++n) {
    BoundRow r;
    r.n = n;
    r.u_known = known_u(n);
    r.naive_upper = naive_upper(n);
    r.quad_upper = quad_upper(n);
    if (n >= 4 && (n & (n - 1)) == 0) {
      int k = 0;
      while ((1 << k) < n) ++k;
      r.chung_lower = chung_lower(k).raw;
    }
    r.kalmar = kalmar(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::string u_text(const std::optional<KnownU>& u) {
  if (!u) return "-";
  return (u->exact ? "" : "<=") + std::to_string(u->value);
}

}  // namespace

std::string format_bound_table_text(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  const int w = 12;
  out << std::left << std::setw(5) << "n" << std::right << std::setw(w) << "u_known"
      << std::setw(w) << "naive_upper" << std::setw(w) << "quad_upper" << std::setw(w)
      << "chung_lower" << std::setw(w) << "kalmar" << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(5) << r.n << std::right << std::setw(w) << u_text(r.u_known)
        << std::setw(w) << r.naive_upper.str() << std::setw(w) << r.quad_upper.str()
        << std::setw(w) << (r.chung_lower ? r.chung_lower->str() : std::string("-"))
        << std::setw(w) << r.kalmar.str() << '\n';
  }
  return out.str();
}

std::string format_bound_table_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "n,u_known,naive_upper,quad_upper,chung_lower,kalmar\n";
  for (const auto& r : rows) {
    out << r.n << ',' << (r.u_known ? u_text(r.u_known) : "") << ',' << r.naive_upper.str() << ','
        << r.quad_upper.str() << ',' << (r.chung_lower ? r.chung_lower->str() : "") << ','
        << r.kalmar.str() << '\n';
  }
  return out.str();
}

nlohmann::json bound_table_json(const std::vector<BoundRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["n"] = r.n;
    if (r.u_known) {
      row["u_known"] = {{"value", r.u_known->value}, {"exact", r.u_known->exact}};
    } else {
      row["u_known"] = nullptr;
    }
    // decimal strings keep big values exact
    row["naive_upper"] = r.naive_upper.str();
    row["quad_upper"] = r.quad_upper.str();
    row["chung_lower"] = r.chung_lower ? nlohmann::json(r.chung_lower->str()) : nlohmann::json();
    row["kalmar"] = r.kalmar.str();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace utk
