#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "partpat/error.hpp"
#include "partpat/seq.hpp"

using namespace partpat;

TEST_CASE("validate_partition") {
  CHECK(validate_partition(SymbolSeq::parse("1231242")));
  CHECK_FALSE(validate_partition(SymbolSeq::parse("1321")));
  CHECK(validate_partition(SymbolSeq{}));
  CHECK_FALSE(validate_partition(SymbolSeq::parse("2")));
  for (int n = 0; n <= 6; ++n) {
    // brute force over [n]^n
    std::set<oracle::Seq> valid;
    for (auto& s : oracle::partitions(n)) valid.insert(s);
    std::vector<Symbol> v(n, 1);
    std::size_t hits = 0;
    while (true) {
      bool ok = validate_partition(std::span<const Symbol>(v));
      CHECK(ok == valid.count(oracle::Seq(v.begin(), v.end())) > 0);
      hits += ok;
      int i = n - 1;
      while (i >= 0 && v[i] == n) v[i--] = 1;
      if (i < 0) break;
      ++v[i];
    }
    CHECK(hits == valid.size());
  }
}

TEST_CASE("parse and print") {
  CHECK(SymbolSeq::parse("12112").str() == "12112");
  CHECK(SymbolSeq::parse("1,2,11,3").str() == "1,2,11,3");
  CHECK(SymbolSeq::parse("1,2,3").str() == "123");
  CHECK(SymbolSeq::parse("").empty());
  CHECK_THROWS_AS(SymbolSeq::parse("12a"), ParseError);
  CHECK_THROWS_AS(SymbolSeq::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(SymbolSeq::parse("102"), ParseError);
  CHECK_THROWS_AS(Partition::parse("1321"), ParseError);
  CHECK_THROWS_AS(Partition::from(SymbolSeq::parse("21")), PreconditionError);
  CHECK(Partition::parse("1231242").blocks() == 4);
}

TEST_CASE("partition stream") {
  std::vector<std::string> got;
  for (auto& p : all_partitions(3)) got.push_back(p.str());
  CHECK(got == std::vector<std::string>{"111", "112", "121", "122", "123"});
  CHECK(all_partitions(0).size() == 1);
  auto bell = oracle::bell(12);
  for (int n = 0; n <= 12; ++n) {
    std::uint64_t c = 0;
    for_each_partition(n, [&](const std::vector<Symbol>&) { ++c; });
    CHECK(c == bell[n]);
  }
  CHECK(bell[11] == 678570);
  for (int n = 0; n <= 8; ++n) {
    auto ours = all_partitions(n);
    auto ref = oracle::partitions(n);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(testutil::to_ints(ours[i].seq()) == ref[i]);
  }
  // restartable by prefix
  PartitionStream st(5, SymbolSeq{1, 2});
  std::vector<Symbol> v;
  int c = 0;
  while (st.next(v)) {
    CHECK(v[0] == 1);
    CHECK(v[1] == 2);
    ++c;
  }
  CHECK(c == 52 - 15);
}

TEST_CASE("blocks and remove_first_block") {
  auto b = blocks_of(Partition::parse("1231242"));
  REQUIRE(b.size() == 4);
  CHECK(b[0] == std::vector<std::size_t>{1, 4});
  CHECK(b[1] == std::vector<std::size_t>{2, 5, 7});
  CHECK(b[2] == std::vector<std::size_t>{3});
  CHECK(b[3] == std::vector<std::size_t>{6});
  CHECK(blocks_of(Partition::parse("111")).size() == 1);
  CHECK(remove_first_block(Partition::parse("1231242")).str() == "12131");
  CHECK(remove_first_block(Partition::parse("1111")).size() == 0);
  CHECK(remove_first_block(Partition::parse("12")).str() == "1");
  for (int n = 1; n <= 8; ++n)
    for (auto& p : all_partitions(n)) {
      auto r = remove_first_block(p);
      CHECK(r.blocks() == p.blocks() - 1);
      CHECK(r.size() == p.size() - blocks_of(p)[0].size());
    }
}

TEST_CASE("k-sequences") {
  CHECK(is_k_semicanonical(SymbolSeq::parse("1441242341").view(), 4, 2));
  for (int n = 0; n <= 8; ++n)
    for (auto& p : all_partitions(n))
      for (int k = 1; k <= std::max(p.blocks(), 1); ++k) {
        if (p.blocks() == 0) continue;
        KSeq s = to_k_sequence(p, k);
        REQUIRE(is_k_semicanonical(s.seq.view(), p.blocks(), k));
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = 0; j < p.size(); ++j) CHECK((s.seq[i] == s.seq[j]) == (p[i] == p[j]));
        CHECK(from_k_sequence(s) == p);
        if (k == p.blocks()) CHECK(s.seq == p.seq());
        // reverse-complement exchanges levels 1 and m; intermediate levels do
        // not map to k-sequences (1231 at k = 2 gives 3123)
        if (k == 1 || k == p.blocks()) {
          SymbolSeq rc = reverse_complement(s.seq, p.blocks());
          CHECK(is_k_semicanonical(rc.view(), p.blocks(), p.blocks() - k + 1));
        }
      }
  CHECK_THROWS_AS(to_k_sequence(Partition::parse("12"), 3), PreconditionError);
}

TEST_CASE("reverse complement") {
  CHECK(reverse_complement(SymbolSeq::parse("121"), 2) == SymbolSeq::parse("212"));
  CHECK(is_k_semicanonical(SymbolSeq::parse("1231").view(), 3, 2));
  CHECK_FALSE(is_k_semicanonical(reverse_complement(SymbolSeq::parse("1231"), 3).view(), 3, 2));
  CHECK_THROWS_AS(reverse_complement(SymbolSeq::parse("13"), 2), PreconditionError);
  std::set<SymbolSeq> image, target;
  std::vector<Symbol> v(5, 1);
  while (true) {
    SymbolSeq s(v);
    CHECK(reverse_complement(reverse_complement(s, 2), 2) == s);
    if (is_k_semicanonical(s.view(), 2, 1) && !oracle::contains(testutil::to_ints(s), {1, 2, 1, 1, 2}))
      image.insert(reverse_complement(s, 2));
    int i = 4;
    while (i >= 0 && v[i] == 2) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  for (auto& p : all_partitions(5))
    if (p.blocks() == 2 && !oracle::contains(testutil::to_ints(p.seq()), {1, 2, 2, 1, 2})) target.insert(p.seq());
  CHECK(image == target);
}
