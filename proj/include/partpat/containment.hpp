#pragma once

#include <optional>
#include <span>
#include <vector>

#include "partpat/seq.hpp"

namespace partpat {

// 0-based positions of an occurrence, strictly increasing.
struct Occurrence {
  std::vector<std::size_t> positions;
};

// Leftmost-lexicographic occurrence of pat in hay (order-isomorphic subsequence).
std::optional<Occurrence> find_occurrence(std::span<const Symbol> hay, std::span<const Symbol> pat);
bool contains(std::span<const Symbol> hay, std::span<const Symbol> pat);
inline bool contains(const SymbolSeq& hay, const SymbolSeq& pat) { return contains(hay.view(), pat.view()); }

// Occurrence in which every copy of pattern symbol `pinned` maps to `value`.
std::optional<Occurrence> find_pinned(std::span<const Symbol> hay, std::span<const Symbol> pat, int pinned,
                                      int value);

// sigma over {1,2,3}; the 2s are matched by k, 1s by some l < k, 3s by some h > k.
bool contains_at_level(const Partition& p, const SymbolSeq& sigma, int k);

bool is_124_pattern(const SymbolSeq& tau);
bool is_134_pattern(const SymbolSeq& tau);
bool contains_124_at_level(const Partition& p, const SymbolSeq& tau, int k);
bool contains_134_at_level(const Partition& p, const SymbolSeq& tau, int k);

// Precompiled pattern for the enumeration hot loop.
class Matcher {
 public:
  explicit Matcher(std::span<const Symbol> pat);
  // true iff s[0..len) has an occurrence whose last position is len-1
  bool completes(const Symbol* s, int len) const;
  int length() const { return k_; }

 private:
  bool back(const Symbol* s, int i, int pos_max, int* val) const;
  std::vector<int> rank_;
  int k_ = 0;
  int d_ = 0;
};

}  // namespace partpat
