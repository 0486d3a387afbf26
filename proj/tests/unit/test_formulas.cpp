#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "partpat/enumeration.hpp"
#include "partpat/error.hpp"
#include "partpat/formulas.hpp"

using namespace partpat;

namespace {

// independent oracles
std::vector<std::vector<count_t>> stirling_triangle(int nmax) {
  std::vector<std::vector<count_t>> s(nmax + 1, std::vector<count_t>(nmax + 1, 0));
  s[0][0] = 1;
  for (int n = 1; n <= nmax; ++n)
    for (int m = 1; m <= n; ++m) s[n][m] = m * s[n - 1][m] + s[n - 1][m - 1];
  return s;
}

std::vector<count_t> catalan_triangle(int nmax) {  // ballot numbers, last column
  std::vector<count_t> out{1};
  std::vector<count_t> row{1};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<count_t> next(n + 1, 0);
    for (int k = 0; k <= n; ++k) next[k] = (k > 0 ? next[k - 1] : 0) + (k < n ? row[k] : 0);
    out.push_back(next[n]);
    row = next;
  }
  return out;
}

}  // namespace

TEST_CASE("bell, stirling, catalan") {
  auto st = stirling_triangle(20);
  auto bt = oracle::bell(25);
  auto ct = catalan_triangle(20);
  CHECK(bell(3) == 5);
  CHECK(stirling2(4, 2) == 7);
  CHECK(catalan(6) == 132);
  for (int n = 0; n <= 20; ++n) {
    count_t sum = 0;
    for (int m = 0; m <= n; ++m) {
      CHECK(stirling2(n, m) == st[n][m]);
      sum += stirling2(n, m);
    }
    CHECK(sum == bell(n));
    CHECK(catalan(n) == ct[n]);
    if (n >= 1) {
      CHECK(stirling2(n, n) == 1);
      CHECK(stirling2(n, 1) == 1);
    }
  }
  for (int n = 0; n <= 25; ++n) CHECK(bell(n) == bt[n]);
  CHECK_THROWS_AS(bell(40), OverflowError);
  CHECK_THROWS_AS(binomial(100, 50), OverflowError);
  CHECK(binomial(66, 33) == 7219428434016265740ull);
}

TEST_CASE("blocks of bounded size") {
  // involutions: a(n) = a(n-1) + (n-1) a(n-2)
  std::vector<count_t> inv{1, 1};
  for (int n = 2; n <= 20; ++n) inv.push_back(inv[n - 1] + (n - 1) * inv[n - 2]);
  for (int n = 0; n <= 20; ++n) CHECK(count_blocksize_lt(3, n) == inv[n]);
  std::vector<count_t> a1 = {1, 2, 4, 10, 26, 76, 232};
  for (int n = 1; n <= 7; ++n) CHECK(count_blocksize_lt(3, n) == a1[n - 1]);
  for (int n = 0; n <= 10; ++n) CHECK(count_blocksize_lt(2, n) == 1);
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 10; ++n)
      CHECK(count_blocksize_lt(k, n) == count_avoiders(Partition::from(repeat(1, k)), n));
}

TEST_CASE("fewer than k blocks") {
  std::vector<count_t> row{187, 715, 2795, 11051, 43947, 175275};
  for (int n = 6; n <= 11; ++n) CHECK(count_blocks_lt(5, n) == row[n - 6]);
  for (int n = 1; n <= 10; ++n) CHECK(count_blocks_lt(2, n) == 1);
  // A007051: (3^(n-1) + 1) / 2
  count_t p3 = 1;
  for (int n = 1; n <= 15; ++n) {
    CHECK(count_blocks_lt(4, n) == (p3 + 1) / 2);
    p3 *= 3;
  }
  for (int m = 3; m <= 4; ++m) {
    std::vector<SymbolSeq> fam;
    SymbolSeq head;
    for (int i = 1; i < m; ++i) head += SymbolSeq{i};
    for (int d = 1; d <= m; ++d) fam.push_back(head + SymbolSeq{m} + SymbolSeq{d});
    for (int d = 1; d < m; ++d) fam.push_back(head + SymbolSeq{d} + SymbolSeq{m});
    for (auto& s : fam)
      for (int n = 0; n <= 10; ++n) CHECK(count_avoiders(Partition::from(s), n) == count_blocks_lt(m + 1, n));
  }
}

TEST_CASE("lift and its inverse") {
  for (int m = 2; m <= 4; ++m) {
    SeqVector tau = blocksize_lt_vector(m, 11);
    SymbolSeq sigma = SymbolSeq{1} + repeat(2, m);
    for (int n = 0; n <= 11; ++n) {
      count_t direct = count_avoiders(Partition::from(sigma), n);
      CHECK(lift(tau, n) == direct);
      CHECK(corollary_1222_egf_counts(m, n) == direct);
    }
  }
  for (int n = 0; n <= 8; ++n) CHECK(corollary_1222_egf_counts(1, n) == 1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    SeqVector v(12);
    for (auto& x : v) x = rng() % 100000;
    SeqVector up = lift_vector(v, 12);
    for (int n = 0; n <= 10; ++n) CHECK(lift_inverse(up, n) == v[n]);
    for (int n = 1; n <= 11; ++n) CHECK(lift_inverse_top(up, n) == v[n - 1]);
  }
  // vectors from real patterns of size <= 4
  for (int k = 1; k <= 4; ++k)
    for (auto& p : all_partitions(k)) {
      SeqVector tau;
      for (int n = 0; n <= 11; ++n) tau.push_back(count_avoiders(p, n));
      SeqVector up = lift_vector(tau, 12);
      for (int n = 0; n <= 10; ++n) CHECK(lift_inverse(up, n) == tau[n]);
    }
  SeqVector bad{1, 5, 0, 0};
  CHECK_THROWS_AS(lift_inverse(bad, 1), InvariantError);
}

TEST_CASE("t(n,k)") {
  std::vector<count_t> t4{5, 5, 3, 1};
  for (int k = 1; k <= 4; ++k) CHECK(t_closed(4, k) == t4[k - 1]);
  for (int n = 1; n <= 20; ++n) {
    count_t sum = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(t_closed(n, k) == t_rec(n, k));
      sum += t_rec(n, k);
    }
    CHECK(t_rec(n, n) == 1);
    if (n <= 15) CHECK(sum == catalan(n));
  }
  CHECK(t_rec(3, 0) == 0);
  CHECK(t_rec(3, 4) == 0);
  CHECK(t_closed(3, 4) == 0);
}
