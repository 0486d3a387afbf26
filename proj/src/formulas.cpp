#include "partpat/formulas.hpp"

#include <map>
#include <mutex>

#include "partpat/error.hpp"

namespace partpat {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

count_t narrow(unsigned __int128 v) {
  if (v > static_cast<unsigned __int128>(~count_t{0})) throw OverflowError("64-bit overflow");
  return static_cast<count_t>(v);
}

}  // namespace

count_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact at every step
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    narrow(r);  // partial products are binomials, so they only grow
  }
  return narrow(r);
}

count_t stirling2(int n, int m) {
  need(n >= 0 && m >= 0, "stirling2: negative argument");
  if (m > n) return 0;
  std::vector<count_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) row[j] = add_checked(mul_checked(static_cast<count_t>(j), row[j]), row[j - 1]);
    row[0] = 0;
  }
  return row[m];
}

count_t bell(int n) {
  need(n >= 0, "bell: negative argument");
  count_t s = 0;
  for (int m = 0; m <= n; ++m) s = add_checked(s, stirling2(n, m));
  return s;
}

count_t catalan(int n) {
  need(n >= 0, "catalan: negative argument");
  unsigned __int128 c = 1;
  for (int i = 0; i < n; ++i) {
    c = c * static_cast<unsigned>(2 * (2 * i + 1)) / static_cast<unsigned>(i + 2);
    narrow(c);
  }
  return narrow(c);
}

SeqVector blocksize_lt_vector(int k, int n_max) {
  need(k >= 1, "count_blocksize_lt: k must be positive");
  SeqVector a(static_cast<std::size_t>(n_max) + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    count_t s = 0;
    for (int j = 0; j <= k - 2 && j <= n - 1; ++j) s = add_checked(s, mul_checked(binomial(n - 1, j), a[n - 1 - j]));
    a[n] = s;
  }
  return a;
}

count_t count_blocksize_lt(int k, int n) {
  need(n >= 0, "negative n");
  return blocksize_lt_vector(k, n)[n];
}

count_t count_blocks_lt(int k, int n) {
  need(n >= 0 && k >= 0, "negative argument");
  count_t s = 0;
  for (int i = 0; i < k && i <= n; ++i) s = add_checked(s, stirling2(n, i));
  return s;
}

count_t lift(const SeqVector& tau, int n) {
  need(n >= 0, "negative n");
  if (n == 0) return 1;
  need(tau.size() >= static_cast<std::size_t>(n), "lift: tau counts must reach n-1");
  count_t s = 0;
  for (int i = 0; i <= n - 1; ++i) s = add_checked(s, mul_checked(binomial(n - 1, i), tau[i]));
  return s;
}

SeqVector lift_vector(const SeqVector& tau, int n_max) {
  SeqVector out;
  for (int n = 0; n <= n_max; ++n) out.push_back(lift(tau, n));
  return out;
}

namespace {

count_t signed_result(__int128 s) {
  if (s < 0) throw InvariantError("lift_inverse: negative result (input is not a lifted vector)");
  if (s > static_cast<__int128>(~count_t{0})) throw OverflowError("lift_inverse overflow");
  return static_cast<count_t>(s);
}

}  // namespace

count_t lift_inverse(const SeqVector& sigma, int n) {
  need(n >= 0 && sigma.size() >= static_cast<std::size_t>(n) + 2, "lift_inverse: sigma counts must reach n+1");
  __int128 s = 0;
  for (int i = 0; i <= n; ++i) {
    __int128 term = static_cast<__int128>(binomial(n, i)) * static_cast<__int128>(sigma[i + 1]);
    s += ((n - i) % 2 == 0) ? term : -term;
  }
  return signed_result(s);
}

count_t lift_inverse_top(const SeqVector& sigma, int n) {
  need(n >= 1 && sigma.size() >= static_cast<std::size_t>(n) + 1, "lift_inverse_top: sigma counts must reach n");
  __int128 s = 0;
  for (int i = 0; i <= n - 1; ++i) {
    __int128 term = static_cast<__int128>(binomial(n - 1, i)) * static_cast<__int128>(sigma[n - i]);
    s += (i % 2 == 0) ? term : -term;
  }
  return signed_result(s);
}

count_t t_closed(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  unsigned __int128 num = static_cast<unsigned __int128>(binomial(2 * n - k - 1, n - 1)) * static_cast<unsigned>(k);
  if (num % static_cast<unsigned>(n) != 0) throw InvariantError("t_closed: division not exact");
  return narrow(num / static_cast<unsigned>(n));
}

count_t t_rec(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  static std::mutex mu;
  static std::vector<std::vector<count_t>> memo{{0}, {0, 1}};
  std::lock_guard lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    int r = static_cast<int>(memo.size());
    std::vector<count_t> row(static_cast<std::size_t>(r) + 1, 0);
    for (int kk = 1; kk <= r; ++kk) {
      count_t s = 0;
      for (int j = std::max(kk - 1, 1); j <= r - 1; ++j) s = add_checked(s, memo[r - 1][j]);
      row[kk] = s;
    }
    memo.push_back(std::move(row));
  }
  return memo[n][k];
}

count_t corollary_1222_egf_counts(int m, int n) {
  need(m >= 1, "m must be positive");
  return lift(blocksize_lt_vector(m, std::max(n, 1)), n);
}

}  // namespace partpat
