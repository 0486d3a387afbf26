#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partpat/fillings.hpp"
#include "partpat/seq.hpp"

namespace partpat {

// ---- chunks and 1^k 2 1^(m-k) -> 1^m 2

struct Chunks {
  std::vector<SymbolSeq> chunks;  // P_1..P_p, symbols as in the partition
  Partition reduced;              // pi minus its first block
};

Chunks chunk_decompose(const Partition& p);
Partition chunk_compose(const std::vector<SymbolSeq>& chunks);  // 1 P_1 1 P_2 ...

SymbolSeq ones_two_ones(int r, int s);  // 1^r 2 1^s

Partition thm12_map(const Partition& p, int k, int m);
Partition thm12_inverse(const Partition& p, int k, int m);

// ---- fillings of stack polyominoes: M(2^p 1 2^q, 2) -> M(2^(p+q) 1, 2)

Filling fall_bijection(const Filling& f, int p, int q);
Filling fall_inverse(const Filling& f, int p, int q);

// ---- landscapes

// Letters L, K, H; K stands for the level symbol.
struct LandscapeWord {
  int level = 0;
  std::string letters;
  std::string str() const;  // K printed as the level when it is a single digit
  friend bool operator==(const LandscapeWord&, const LandscapeWord&) = default;
};

struct Landscape {
  LandscapeWord word;
  std::vector<SymbolSeq> low, high;  // clusters in order
};

bool is_landscape_word(std::string_view letters);
Landscape landscape(const Partition& p, int k);
bool compatible(std::string_view a, std::string_view b);
bool l_compatible(std::string_view a, std::string_view b);  // also keeps separation of L's
bool h_compatible(std::string_view a, std::string_view b);  // also keeps separation of H's
Partition shuffle(const Partition& p, const LandscapeWord& target);

// ---- hybrid chains

enum class HybridMap {
  SigmaMinus,  // 1 2^(p+1) 1 2^q 3 2^r   ->  1 2^(p+1) 3 2^q 1 2^r
  SigmaPlus,   // 1 2^(p+2) 1 2^q 3 2^r   ->  1 2^(p+1) 1 2^q 3 2^(r+1)
  Lemma124a,   // 123 2^p 4 1 2^q         ->  123 2^p 4 2^q 1       (p, q >= 1)
  Lemma124b,   // 123 2^p 1 4 2^q         ->  123 1 2^p 4 2^q       (p, q >= 1)
  Lemma134a,   // 123^(p+1) 1 3^q 4       ->  123^(p+1) 1 4 3^q     (p >= 0, q >= 1)
  Lemma134b,   // 123^(p+1) 4 1 3^q       ->  1234 3^p 1 3^q        (p >= 0, q >= 1)
};

struct HybridParams {
  int p = 0;
  int q = 0;
  int r = 0;
};

SymbolSeq hybrid_source(HybridMap map, HybridParams prm);
SymbolSeq hybrid_target(HybridMap map, HybridParams prm);
int hybrid_level_symbol(HybridMap map);  // pattern symbol matched by the level

bool contains_pattern_at_level(const Partition& p, const SymbolSeq& pattern, int level_symbol, int k);
// avoids the target at levels below k and the source at levels k and above
bool is_hybrid(const Partition& p, HybridMap map, HybridParams prm, int k);

// f_k (or its inverse); identity when k exceeds the number of blocks
Partition hybrid_step(const Partition& p, HybridMap map, HybridParams prm, int k, bool inverse = false);
Partition hybrid_chain(const Partition& p, HybridMap map, HybridParams prm, bool inverse = false);

Partition hybrid_chain_sigma(const Partition& p, bool plus, int pp, int q, int r, bool inverse = false);
Partition hybrid_chain_124(const Partition& p, int lemma, int pp, int q, bool inverse = false);  // lemma 1..4

// ---- tails of 1123-avoiders

struct TailSplit {
  int m = 0;
  SymbolSeq tail;
};

bool is_tail(const SymbolSeq& s);  // 123-avoiding
int tail_rank(const SymbolSeq& s);
std::vector<SymbolSeq> tails_of_rank(int n);
TailSplit tail_decompose(const Partition& p);
Partition tail_compose(const TailSplit& t);

SymbolSeq tail_f1(const SymbolSeq& s, int k);
SymbolSeq tail_f2(const SymbolSeq& s, int k);
// T0(n,k) -> union over j >= k-1 of T0(n-1,j), k = last symbol; k = 1 drops the last symbol
SymbolSeq tail_reduce(const SymbolSeq& s);
SymbolSeq tail_extend(const SymbolSeq& s, int k);

// ---- pseudoswap and phi

// Sparse matrix: col[j] = row of the 1 in column j, 0 if empty.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::uint8_t> col;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
  friend auto operator<=>(const SparseMatrix& a, const SparseMatrix& b) { return a.col <=> b.col; }
};

bool avoids_12112_in_rows(const SparseMatrix& m, int x, int y);
SparseMatrix pseudoswap(const SparseMatrix& m, int x);
SparseMatrix pseudoswap_inverse(const SparseMatrix& m, int x);

struct KpqMatrix {
  SymbolSeq seq;  // semi-standard matrix as a sequence
  int m = 0;
  int k = 1;
  int p = 1;
  int q = 1;
};

// Reads the key row p and q off a semi-standard matrix; nullopt if it is not a
// (k,p,q)-matrix for any p.
std::optional<KpqMatrix> as_kpq(const SymbolSeq& s, int m, int k);
KpqMatrix phi(const KpqMatrix& a);
KpqMatrix phi_inverse(const KpqMatrix& a);

Partition bijection_12112_12212(const Partition& p);
Partition bijection_12212_12112(const Partition& p);

}  // namespace partpat
