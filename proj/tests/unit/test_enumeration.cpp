#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "json.hpp"
#include "partpat/enumeration.hpp"
#include "partpat/error.hpp"
#include "partpat/formulas.hpp"

using namespace partpat;
namespace fs = std::filesystem;

namespace {

count_t filtered(const SymbolSeq& pat, int n) {
  count_t c = 0;
  for (auto& p : all_partitions(n)) c += !contains(p.seq(), pat);
  return c;
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("partpat-test-" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d / name;
}

}  // namespace

TEST_CASE("pruned counts match filter-after-generate") {
  for (int k = 1; k <= 5; ++k)
    for (auto& pat : all_partitions(k)) {
      auto lv = count_levels(pat.seq(), 8);
      for (int n = 0; n <= 8; ++n) REQUIRE(lv.total[n] == filtered(pat.seq(), n));
      for (int n = 0; n < k; ++n) CHECK(lv.total[n] == bell(n));
    }
}

TEST_CASE("small tables") {
  for (auto t : {"112", "121", "122", "123"})
    for (int n = 1; n <= 12; ++n) CHECK(count_avoiders(Partition::parse(t), n) == (count_t{1} << (n - 1)));
  std::vector<count_t> r1122{1, 1, 2, 5, 14, 42, 133, 441};
  for (int n = 0; n < 8; ++n) CHECK(count_avoiders(Partition::parse("1122"), n) == r1122[n]);
  for (auto t : {"1123", "1212", "1221"})
    for (int n = 0; n <= 11; ++n) CHECK(count_avoiders(Partition::parse(t), n) == catalan(n));
  std::vector<count_t> r5{187, 715, 2795, 11051, 43947, 175275};
  for (int n = 6; n <= 11; ++n) CHECK(count_avoiders(Partition::parse("12345"), n) == r5[n - 6]);
}

TEST_CASE("threads and shard depth do not change results") {
  auto pat = SymbolSeq::parse("12312");
  auto a = count_levels(pat, 10, true, {1, 4});
  for (unsigned th : {2u, 4u, 8u})
    for (int d : {0, 2, 4, 6}) {
      auto b = count_levels(pat, 10, true, {th, d});
      CHECK(a.total == b.total);
      CHECK(a.by_blocks == b.by_blocks);
    }
}

TEST_CASE("block refinement") {
  for (int n = 0; n <= 10; ++n) {
    auto a = count_avoiders_by_blocks(Partition::parse("12112"), n);
    auto b = count_avoiders_by_blocks(Partition::parse("12212"), n);
    CHECK(a == b);
  }
  auto m = count_avoiders_by_blocks(Partition::parse("12345"), 11);
  count_t s = 0;
  for (auto& [k, v] : m) s += v;
  CHECK(s == 175275);
  for (int n = 1; n <= 9; ++n) {
    auto r = count_avoiders_by_blocks(Partition::parse("1212"), n);
    CHECK(r[1] == 1);
    for (auto& [k, v] : r) CHECK(v == [&] {
            count_t c = 0;
            for (auto& p : all_partitions(n)) c += p.blocks() == k && !contains(p.seq(), SymbolSeq::parse("1212"));
            return c;
          }());
  }
}

TEST_CASE("crossings and nestings refine equally") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(count_avoiders_by_blocks(Partition::parse("1212"), n) ==
          count_avoiders_by_blocks(Partition::parse("1221"), n));
    if (n <= 9)
      CHECK(count_avoiders_by_blocks(Partition::parse("123123"), n) ==
            count_avoiders_by_blocks(Partition::parse("123321"), n));
  }
}

TEST_CASE("classify") {
  auto r3 = classify(3, 9);
  REQUIRE(r3.classes.size() == 2);
  std::set<std::string> big;
  for (auto& c : r3.classes)
    if (c.members.size() == 4)
      for (auto& m : c.members) big.insert(m.str());
  CHECK(big == std::set<std::string>{"112", "121", "122", "123"});
  CHECK(classify(1, 3).classes.size() == 1);
  CHECK(classify(2, 6).classes.size() == 1);
  auto r4 = classify(4, 11);
  CHECK(r4.classes.size() == 5);
  std::size_t members = 0;
  for (auto& c : r4.classes) members += c.members.size();
  CHECK(members == 15);
  CHECK_THROWS_AS(classify(4, 3), PreconditionError);
  // full vectors agree with lazy grouping
  auto lazy = classify(4, 10), full = classify(4, 10, {}, true);
  REQUIRE(lazy.classes.size() == full.classes.size());
  for (std::size_t i = 0; i < lazy.classes.size(); ++i) {
    CHECK(lazy.classes[i].members == full.classes[i].members);
    CHECK(full.classes[i].last_n == 10);
  }
}

TEST_CASE("witness") {
  CHECK(witness(Partition::parse("111"), Partition::parse("112"), 4) == 4);
  CHECK_FALSE(witness(Partition::parse("12112"), Partition::parse("12122"), 12).has_value());
  CHECK(witness(Partition::parse("1212"), Partition::parse("1122"), 10) == 6);
}

TEST_CASE("size-5 class rows agree within rows") {
  auto t = fixture::load("size5_classes.txt");
  REQUIRE(t.rows.size() == 21);
  for (auto& row : t.rows)
    for (auto& p : row.patterns) {
      auto lv = count_levels(SymbolSeq::parse(p), 9);
      for (int n = t.first; n <= 9; ++n) CHECK(lv.total[n] == row.counts[n - t.first]);
    }
}

TEST_CASE("cache round trip") {
  fs::path f = scratch("cache.json");
  fs::remove(f);
  std::mt19937 rng(11);
  std::vector<std::pair<std::string, int>> probes;
  auto pats = all_partitions(4);
  {
    CountCache c(f.string());
    CHECK(c.size() == 0);
    for (int i = 0; i < 100; ++i) {
      auto& p = pats[rng() % pats.size()];
      int n = static_cast<int>(rng() % 10);
      probes.emplace_back(p.str(), n);
      if (!c.get(p.str(), n)) c.put(p.str(), n, count_avoiders(p, n));
    }
    c.save();
  }
  CountCache back(f.string());
  for (auto& [p, n] : probes) {
    auto v = back.get(p, n);
    REQUIRE(v);
    CHECK(*v == count_avoiders(Partition::parse(p), n));
  }
  CHECK_THROWS_AS(back.put(probes[0].first, probes[0].second, 123456789), InvariantError);

  auto j = nlohmann::json::parse(std::ifstream(f));
  CHECK(j["format"] == "partpat-count-cache");
  CHECK(j["version"] == CountCache::kVersion);
  j["version"] = 99;
  std::ofstream(f) << j.dump();
  CHECK_THROWS_AS(CountCache(f.string()), ParseError);
  std::ofstream(f) << "{not json";
  CHECK_THROWS_AS(CountCache(f.string()), ParseError);
  fs::remove_all(f.parent_path());
}

TEST_CASE("count tables through the cache") {
  fs::path f = scratch("tables.json");
  fs::remove(f);
  CountCache c(f.string());
  auto pat = Partition::parse("1213");
  auto fresh = build_count_table(pat, 3, 9, true);
  auto first = build_count_table(pat, 3, 9, true, {}, &c);
  c.save();
  CountCache again(f.string());
  auto hit = build_count_table(pat, 3, 9, true, {}, &again);
  CHECK(to_csv(fresh) == to_csv(first));
  CHECK(to_csv(fresh) == to_csv(hit));
  CHECK(to_json(fresh) == to_json(hit));
  for (auto& [n, v] : fresh.refined) {
    count_t s = 0;
    for (auto x : v) s += x;
    CHECK(s == fresh.entries.at(n));
    CHECK(s <= bell(n));
  }
  fs::remove_all(f.parent_path());
}

TEST_CASE("emitters") {
  auto t = build_count_table(Partition::parse("12"), 0, 2, false);
  CHECK(to_csv(t) == "pattern,n,count\n12,0,1\n12,1,1\n12,2,1\n");
  auto j = nlohmann::json::parse(to_json(t));
  CHECK(j["pattern"] == "12");
  CHECK(j["rows"].size() == 3);
  auto r = classify(2, 4);
  std::string csv = to_csv(r);
  CHECK(csv.rfind("# 1 class; size 2; counts equal up to n = 4", 0) == 0);
  auto rj = nlohmann::json::parse(to_json(r));
  CHECK(rj.begin().key() == "class_count");
  CHECK(rj["class_count"] == 1);
}
