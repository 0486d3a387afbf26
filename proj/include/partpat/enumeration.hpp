#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "partpat/checked.hpp"
#include "partpat/seq.hpp"

namespace partpat {

struct CountOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  int shard_depth = 4;
};

// Counts of avoiders for every length 0..n_max from one walk of the pruned tree.
// by_blocks[n][m] is filled only when requested.
struct LevelCounts {
  std::vector<count_t> total;
  std::vector<std::vector<count_t>> by_blocks;
};

LevelCounts count_levels(const SymbolSeq& pattern, int n_max, bool by_blocks = false, const CountOptions& opt = {});

count_t count_avoiders(const Partition& pattern, int n, const CountOptions& opt = {});
std::map<int, count_t> count_avoiders_by_blocks(const Partition& pattern, int n, const CountOptions& opt = {});

// Persistent versioned JSON store keyed by (pattern text, n).
class CountCache {
 public:
  static constexpr int kVersion = 1;

  explicit CountCache(std::string path);  // loads the file if present
  static std::string default_path();      // $PARTPAT_CACHE, else ~/.cache/partpat/counts.json

  std::optional<count_t> get(const std::string& pattern, int n) const;
  std::optional<std::vector<count_t>> get_blocks(const std::string& pattern, int n) const;
  void put(const std::string& pattern, int n, count_t c);
  void put_blocks(const std::string& pattern, int n, const std::vector<count_t>& by_m);
  void save();
  const std::string& path() const { return path_; }
  std::size_t size() const;

 private:
  std::string path_;
  std::string created_;
  mutable std::mutex mu_;
  std::map<std::string, std::map<int, count_t>> counts_;
  std::map<std::string, std::map<int, std::vector<count_t>>> blocks_;
  bool dirty_ = false;
};

struct CountTable {
  SymbolSeq pattern;
  std::map<int, count_t> entries;
  std::map<int, std::vector<count_t>> refined;  // n -> counts indexed by m (0..n)
};

CountTable build_count_table(const Partition& pattern, int n_lo, int n_hi, bool by_blocks,
                             const CountOptions& opt = {}, CountCache* cache = nullptr);

struct ClassReport {
  struct Class {
    std::vector<count_t> counts;  // p(size+1), p(size+2), ... through last_n
    int last_n = 0;
    std::vector<SymbolSeq> members;
  };
  int size = 0;
  int horizon = 0;
  std::vector<Class> classes;
};

// Groups the canonical patterns of a size by their counts for n = size+1..horizon.
// Lazy mode stops extending a class once it is a singleton, so its vector may end
// before the horizon; full mode computes every vector to the horizon.
ClassReport classify(int size, int horizon, const CountOptions& opt = {}, bool full_vectors = false,
                     CountCache* cache = nullptr);

std::optional<int> witness(const Partition& p1, const Partition& p2, int max_n, const CountOptions& opt = {});

std::string to_csv(const CountTable& t);
std::string to_json(const CountTable& t);
std::string to_csv(const ClassReport& r);
std::string to_json(const ClassReport& r);

}  // namespace partpat
