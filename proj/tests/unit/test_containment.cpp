#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "partpat/containment.hpp"
#include "partpat/error.hpp"

using namespace partpat;

TEST_CASE("contains, examples") {
  CHECK(contains(SymbolSeq::parse("1231242"), SymbolSeq::parse("1212")));
  CHECK(contains(SymbolSeq::parse("12"), SymbolSeq{}));
  CHECK(contains(SymbolSeq{}, SymbolSeq{}));
  CHECK(contains(SymbolSeq::parse("12121"), SymbolSeq::parse("1221")));
  CHECK_FALSE(contains(SymbolSeq::parse("12112"), SymbolSeq::parse("1221")));
  auto occ = find_occurrence(SymbolSeq::parse("1231242").view(), SymbolSeq::parse("1212").view());
  REQUIRE(occ);
  CHECK(occ->positions == std::vector<std::size_t>{0, 1, 3, 4});
}

TEST_CASE("contains agrees with the subset oracle") {
  std::vector<SymbolSeq> pats;
  for (int k = 1; k <= 4; ++k)
    for (auto& p : all_partitions(k)) pats.push_back(p.seq());
  for (int n = 0; n <= 7; ++n)
    for (auto& h : all_partitions(n))
      for (auto& p : pats) REQUIRE(contains(h.seq(), p) == oracle::contains(testutil::to_ints(h.seq()), testutil::to_ints(p)));

  std::mt19937 rng(7);
  auto five = all_partitions(5);
  auto six = all_partitions(6);
  for (int t = 0; t < 3000; ++t) {
    int n = 8 + static_cast<int>(rng() % 3);
    std::vector<Symbol> v{1};
    int mx = 1;
    for (int i = 1; i < n; ++i) {
      int x = 1 + static_cast<int>(rng() % (mx + 1));
      mx = std::max(mx, x);
      v.push_back(static_cast<Symbol>(x));
    }
    SymbolSeq h(v);
    const auto& pool = t % 2 ? five : six;
    const SymbolSeq& p = pool[rng() % pool.size()].seq();
    auto occ = find_occurrence(h.view(), p.view());
    REQUIRE(occ.has_value() == oracle::contains(testutil::to_ints(h), testutil::to_ints(p)));
    if (occ) {
      oracle::Seq sub;
      for (auto i : occ->positions) sub.push_back(h[i]);
      CHECK(oracle::contains(sub, testutil::to_ints(p)));
    }
  }
}

TEST_CASE("occurrence is leftmost-lexicographic") {
  for (int n = 0; n <= 7; ++n)
    for (auto& h : all_partitions(n)) {
      SymbolSeq pat{1, 2, 1};
      auto occ = find_occurrence(h.seq().view(), pat.view());
      // brute-force first triple in lexicographic order
      std::optional<std::vector<std::size_t>> first;
      for (std::size_t a = 0; a < h.size() && !first; ++a)
        for (std::size_t b = a + 1; b < h.size() && !first; ++b)
          for (std::size_t c = b + 1; c < h.size() && !first; ++c)
            if (h[a] == h[c] && h[a] < h[b]) first = std::vector<std::size_t>{a, b, c};
      REQUIRE(occ.has_value() == first.has_value());
      if (occ) CHECK(occ->positions == *first);
    }
}

TEST_CASE("monotone under extension") {
  SymbolSeq pat = SymbolSeq::parse("1212");
  for (int n = 1; n <= 8; ++n)
    for (auto& h : all_partitions(n))
      if (contains(h.seq().slice(0, n - 1), pat)) CHECK(contains(h.seq(), pat));
}

TEST_CASE("matcher completes") {
  for (auto txt : {"1212", "12112", "1123", "123"}) {
    SymbolSeq pat = SymbolSeq::parse(txt);
    Matcher m(pat.view());
    for (int n = 1; n <= 8; ++n)
      for (auto& h : all_partitions(n)) {
        bool prefix = contains(h.seq().slice(0, n - 1), pat);
        if (prefix) continue;
        CHECK(m.completes(h.seq().symbols().data(), n) == contains(h.seq(), pat));
      }
  }
}

TEST_CASE("containment at a level") {
  auto p = Partition::parse("1231323142221");
  auto s = SymbolSeq::parse("121223");
  CHECK(contains_at_level(p, s, 3));
  CHECK_FALSE(contains_at_level(p, s, 2));
  CHECK_FALSE(contains_at_level(p, s, 1));
  CHECK_THROWS_AS(contains_at_level(p, SymbolSeq::parse("1234"), 2), PreconditionError);
  for (auto txt : {"1213", "1231", "12123", "12213"}) {
    SymbolSeq sig = SymbolSeq::parse(txt);
    for (int n = 1; n <= 9; ++n)
      for (auto& q : all_partitions(n)) {
        bool any = false;
        for (int k = 1; k <= q.blocks(); ++k) any = any || contains_at_level(q, sig, k);
        REQUIRE(any == contains(q.seq(), sig));
      }
  }
}

TEST_CASE("1-2-4 and 1-3-4 patterns") {
  CHECK(is_124_pattern(SymbolSeq::parse("1232142")));
  CHECK_FALSE(is_124_pattern(SymbolSeq::parse("1232124")));
  CHECK(is_134_pattern(SymbolSeq::parse("1233143")));
  CHECK_FALSE(is_134_pattern(SymbolSeq::parse("1233341")));
  CHECK_THROWS_AS(contains_124_at_level(Partition::parse("1"), SymbolSeq::parse("1232124"), 2), PreconditionError);
  SymbolSeq tau = SymbolSeq::parse("1232142");
  for (int n = 1; n <= 9; ++n)
    for (auto& q : all_partitions(n)) {
      bool any = false;
      for (int k = 1; k <= q.blocks(); ++k) {
        bool at = contains_124_at_level(q, tau, k);
        if (at) CHECK(contains(q.seq(), tau));
        any = any || at;
      }
      REQUIRE(any == contains(q.seq(), tau));
    }
}
