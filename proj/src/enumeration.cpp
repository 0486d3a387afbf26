#include "partpat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "partpat/containment.hpp"
#include "partpat/error.hpp"

namespace partpat {

namespace {

struct Walker {
  const Matcher& mt;
  int n;
  bool blocks;
  std::vector<Symbol> s;
  std::vector<count_t> cnt;  // [len] or [len * (n + 1) + m]

  Walker(const Matcher& m, int n_max, bool by_blocks)
      : mt(m), n(n_max), blocks(by_blocks), s(static_cast<std::size_t>(n_max) + 1),
        cnt(by_blocks ? static_cast<std::size_t>(n_max + 1) * (n_max + 1) : static_cast<std::size_t>(n_max) + 1) {}

  void tally(int len, int mx) { ++cnt[blocks ? static_cast<std::size_t>(len) * (n + 1) + mx : len]; }

  void go(int len, int mx) {
    tally(len, mx);
    if (len == n) return;
    for (int v = 1; v <= mx + 1; ++v) {
      s[len] = static_cast<Symbol>(v);
      if (!mt.completes(s.data(), len + 1)) go(len + 1, std::max(mx, v));
    }
  }

  // Walks to `depth` and collects the surviving prefixes there without counting them.
  void prefixes(int len, int mx, int depth, std::vector<std::pair<std::vector<Symbol>, int>>& out) {
    if (len == depth) {
      out.emplace_back(std::vector<Symbol>(s.begin(), s.begin() + len), mx);
      return;
    }
    tally(len, mx);
    for (int v = 1; v <= mx + 1; ++v) {
      s[len] = static_cast<Symbol>(v);
      if (!mt.completes(s.data(), len + 1)) prefixes(len + 1, std::max(mx, v), depth, out);
    }
  }
};

LevelCounts unpack(const std::vector<count_t>& cnt, int n, bool blocks) {
  LevelCounts out;
  out.total.assign(static_cast<std::size_t>(n) + 1, 0);
  if (!blocks) {
    out.total = cnt;
    return out;
  }
  out.by_blocks.assign(static_cast<std::size_t>(n) + 1, std::vector<count_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int len = 0; len <= n; ++len)
    for (int m = 0; m <= n; ++m) {
      count_t c = cnt[static_cast<std::size_t>(len) * (n + 1) + m];
      out.by_blocks[len][m] = c;
      out.total[len] = add_checked(out.total[len], c);
    }
  return out;
}

}  // namespace

LevelCounts count_levels(const SymbolSeq& pattern, int n_max, bool by_blocks, const CountOptions& opt) {
  if (n_max < 0) throw PreconditionError("negative n");
  if (n_max > 64) throw PreconditionError("n above supported range");
  Matcher mt(pattern.view());
  int depth = std::clamp(opt.shard_depth, 1, n_max + 1);
  Walker head(mt, n_max, by_blocks);
  std::vector<std::pair<std::vector<Symbol>, int>> tasks;
  if (depth > n_max) {
    head.go(0, 0);
    return unpack(head.cnt, n_max, by_blocks);
  }
  head.prefixes(0, 0, depth, tasks);

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::vector<count_t>> partial(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Walker w(mt, n_max, by_blocks);
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      std::fill(w.cnt.begin(), w.cnt.end(), 0);
      std::copy(tasks[i].first.begin(), tasks[i].first.end(), w.s.begin());
      w.go(depth, tasks[i].second);
      partial[i] = w.cnt;
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<count_t> total = head.cnt;
  for (const auto& part : partial)
    for (std::size_t j = 0; j < total.size(); ++j) total[j] = add_checked(total[j], part[j]);
  return unpack(total, n_max, by_blocks);
}

count_t count_avoiders(const Partition& pattern, int n, const CountOptions& opt) {
  return count_levels(pattern.seq(), n, false, opt).total[n];
}

std::map<int, count_t> count_avoiders_by_blocks(const Partition& pattern, int n, const CountOptions& opt) {
  LevelCounts lc = count_levels(pattern.seq(), n, true, opt);
  std::map<int, count_t> out;
  for (int m = 0; m <= n; ++m)
    if (lc.by_blocks[n][m]) out[m] = lc.by_blocks[n][m];
  return out;
}

CountTable build_count_table(const Partition& pattern, int n_lo, int n_hi, bool by_blocks, const CountOptions& opt,
                             CountCache* cache) {
  if (n_lo < 0 || n_hi < n_lo) throw PreconditionError("bad n range");
  CountTable t;
  t.pattern = pattern.seq();
  std::string key = pattern.str();
  bool hit = cache != nullptr;
  for (int n = n_lo; hit && n <= n_hi; ++n) {
    auto c = cache->get(key, n);
    auto b = by_blocks ? cache->get_blocks(key, n) : std::optional<std::vector<count_t>>(std::vector<count_t>{});
    if (!c || !b) {
      hit = false;
      break;
    }
    t.entries[n] = *c;
    if (by_blocks) t.refined[n] = *b;
  }
  if (hit) return t;
  t.entries.clear();
  t.refined.clear();
  LevelCounts lc = count_levels(pattern.seq(), n_hi, by_blocks, opt);
  for (int n = n_lo; n <= n_hi; ++n) {
    t.entries[n] = lc.total[n];
    if (by_blocks) t.refined[n] = lc.by_blocks[n];
  }
  if (cache) {
    for (int n = 0; n <= n_hi; ++n) {
      cache->put(key, n, lc.total[n]);
      if (by_blocks) cache->put_blocks(key, n, lc.by_blocks[n]);
    }
  }
  return t;
}

namespace {

std::vector<count_t> levels_cached(const SymbolSeq& pat, int n, const CountOptions& opt, CountCache* cache) {
  std::string key = pat.str();
  if (cache) {
    std::vector<count_t> v;
    for (int i = 0; i <= n; ++i) {
      auto c = cache->get(key, i);
      if (!c) break;
      v.push_back(*c);
    }
    if (static_cast<int>(v.size()) == n + 1) return v;
  }
  std::vector<count_t> v = count_levels(pat, n, false, opt).total;
  if (cache)
    for (int i = 0; i <= n; ++i) cache->put(key, i, v[i]);
  return v;
}

}  // namespace

ClassReport classify(int size, int horizon, const CountOptions& opt, bool full_vectors, CountCache* cache) {
  if (size < 0) throw PreconditionError("negative size");
  if (horizon < size) throw PreconditionError("horizon < size");
  ClassReport rep;
  rep.size = size;
  rep.horizon = horizon;
  std::vector<SymbolSeq> pats;
  for (const Partition& p : all_partitions(size)) pats.push_back(p.seq());

  std::vector<std::vector<count_t>> vec(pats.size());
  std::vector<int> last(pats.size(), size);
  if (full_vectors) {
    for (std::size_t i = 0; i < pats.size(); ++i) {
      auto v = levels_cached(pats[i], horizon, opt, cache);
      vec[i].assign(v.begin() + size + 1, v.end());
      last[i] = horizon;
    }
  }

  auto group = [&] {
    std::map<std::vector<count_t>, std::vector<std::size_t>> g;
    for (std::size_t i = 0; i < pats.size(); ++i) g[vec[i]].push_back(i);
    return g;
  };

  if (!full_vectors) {
    for (int n = size + 1; n <= horizon; ++n) {
      auto g = group();
      bool any = false;
      for (auto& [v, idx] : g) {
        if (idx.size() < 2) continue;
        any = true;
        for (std::size_t i : idx) {
          vec[i].push_back(levels_cached(pats[i], n, opt, cache)[n]);
          last[i] = n;
        }
      }
      if (!any) break;
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  for (auto& [v, idx] : group()) groups.push_back(idx);
  // vectors of distinct classes differ inside their common range, so a
  // lexicographic order on the vectors is total
  std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
    const auto& va = vec[a[0]];
    const auto& vb = vec[b[0]];
    std::size_t k = std::min(va.size(), vb.size());
    for (std::size_t i = 0; i < k; ++i)
      if (va[i] != vb[i]) return va[i] < vb[i];
    return pats[a[0]] < pats[b[0]];
  });
  for (const auto& idx : groups) {
    ClassReport::Class c;
    c.counts = vec[idx[0]];
    c.last_n = last[idx[0]];
    for (std::size_t i : idx) c.members.push_back(pats[i]);
    std::sort(c.members.begin(), c.members.end());
    rep.classes.push_back(std::move(c));
  }
  return rep;
}

std::optional<int> witness(const Partition& p1, const Partition& p2, int max_n, const CountOptions& opt) {
  if (max_n < 0) return std::nullopt;
  auto a = count_levels(p1.seq(), max_n, false, opt).total;
  auto b = count_levels(p2.seq(), max_n, false, opt).total;
  for (int n = 0; n <= max_n; ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

}  // namespace partpat
