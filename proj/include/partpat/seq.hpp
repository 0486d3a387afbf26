#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partpat {

using Symbol = std::uint8_t;

// Finite sequence of positive symbols.
class SymbolSeq {
 public:
  SymbolSeq() = default;
  explicit SymbolSeq(std::vector<Symbol> symbols);
  SymbolSeq(std::initializer_list<int> symbols);

  // Accepts "12112" (digits) or "1,2,11,3".
  static SymbolSeq parse(std::string_view text);
  std::string str() const;

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Symbol operator[](std::size_t i) const { return s_[i]; }
  Symbol back() const { return s_.back(); }
  int max() const;
  std::span<const Symbol> view() const { return s_; }
  const std::vector<Symbol>& symbols() const { return s_; }
  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }

  SymbolSeq shifted(int delta) const;
  SymbolSeq reversed() const;
  SymbolSeq slice(std::size_t from, std::size_t to) const;

  SymbolSeq& operator+=(const SymbolSeq& o);
  friend SymbolSeq operator+(SymbolSeq a, const SymbolSeq& b) { return a += b; }
  friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;
  friend auto operator<=>(const SymbolSeq& a, const SymbolSeq& b) { return a.s_ <=> b.s_; }

 private:
  std::vector<Symbol> s_;
};

// sym repeated count times
SymbolSeq repeat(int sym, int count);

std::string format_symbols(std::span<const Symbol> s);

bool validate_partition(std::span<const Symbol> s);
inline bool validate_partition(const SymbolSeq& s) { return validate_partition(s.view()); }

// A canonical sequence (restricted growth string).
class Partition {
 public:
  Partition() = default;
  static Partition from(SymbolSeq s);  // throws PreconditionError unless canonical
  static Partition parse(std::string_view text);

  const SymbolSeq& seq() const { return seq_; }
  int blocks() const { return blocks_; }
  std::size_t size() const { return seq_.size(); }
  Symbol operator[](std::size_t i) const { return seq_[i]; }
  std::string str() const { return seq_.str(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.seq_ <=> b.seq_; }

 private:
  SymbolSeq seq_;
  int blocks_ = 0;
};

// Lexicographic successor stream over partitions of [n] whose sequence starts
// with a fixed prefix.
class PartitionStream {
 public:
  explicit PartitionStream(int n, const SymbolSeq& prefix = {});
  bool next(std::vector<Symbol>& out);

 private:
  int n_;
  std::size_t fixed_;
  std::vector<Symbol> cur_;
  std::vector<int> pmax_;  // pmax_[i] = max(cur_[0..i))
  bool started_ = false;
  bool done_ = false;
};

void for_each_partition(int n, const std::function<void(const std::vector<Symbol>&)>& fn);
std::vector<Partition> all_partitions(int n);

// 1-based positions per block.
std::vector<std::vector<std::size_t>> blocks_of(const Partition& p);

Partition remove_first_block(const Partition& p);

struct KSeq {
  SymbolSeq seq;
  int m = 0;
  int k = 1;
};

bool is_k_semicanonical(std::span<const Symbol> s, int m, int k);
KSeq to_k_sequence(const Partition& p, int k);
Partition from_k_sequence(const KSeq& s);
Partition canonicalize(std::span<const Symbol> s);  // renumber by first occurrence

SymbolSeq reverse_complement(const SymbolSeq& s, int m);

}  // namespace partpat
