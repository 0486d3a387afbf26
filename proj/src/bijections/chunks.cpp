#include "partpat/bijections.hpp"
#include "partpat/containment.hpp"
#include "partpat/error.hpp"

namespace partpat {

Chunks chunk_decompose(const Partition& p) {
  Chunks out;
  std::vector<Symbol> cur;
  bool open = false;
  for (Symbol v : p.seq()) {
    if (v == 1) {
      if (open) out.chunks.emplace_back(cur);
      cur.clear();
      open = true;
    } else {
      cur.push_back(v);
    }
  }
  if (open) out.chunks.emplace_back(cur);
  out.reduced = remove_first_block(p);
  return out;
}

Partition chunk_compose(const std::vector<SymbolSeq>& chunks) {
  std::vector<Symbol> s;
  for (const auto& c : chunks) {
    s.push_back(1);
    s.insert(s.end(), c.begin(), c.end());
  }
  return Partition::from(SymbolSeq(std::move(s)));
}

SymbolSeq ones_two_ones(int r, int s) { return repeat(1, r) + SymbolSeq{2} + repeat(1, s); }

namespace {

std::vector<SymbolSeq> split(const SymbolSeq& s, const std::vector<std::size_t>& lens) {
  std::vector<SymbolSeq> out;
  std::size_t at = 0;
  for (std::size_t l : lens) {
    out.push_back(s.slice(at, at + l));
    at += l;
  }
  if (at != s.size()) throw InvariantError("chunk lengths do not cover the reduced sequence");
  return out;
}

void check_params(int k, int m) {
  if (k < 1 || k >= m) throw PreconditionError("thm12 needs 1 <= k < m");
}

Partition forward(const Partition& pi, int k, int m) {
  if (pi.blocks() <= 1) return pi;
  Chunks ch = chunk_decompose(pi);
  int p = static_cast<int>(ch.chunks.size());
  std::vector<std::size_t> lens;
  for (const auto& c : ch.chunks) lens.push_back(c.size());
  SymbolSeq s = forward(ch.reduced, k, m).seq().shifted(1);
  std::vector<SymbolSeq> parts = split(s, lens);
  if (p < m) return chunk_compose(parts);
  // chunks P_k .. P_{p-m+k} are empty for avoiders of 1^k 2 1^(m-k)
  for (int i = k; i <= p - m + k; ++i)
    if (!parts[i - 1].empty()) throw InvariantError("thm12: chunk P_i with k <= i <= p-(m-k) is nonempty");
  std::vector<SymbolSeq> out;
  for (int i = 1; i <= k - 1; ++i) out.push_back(parts[i - 1]);
  for (int i = p - m + k + 1; i <= p; ++i) out.push_back(parts[i - 1]);
  for (int i = 0; i < p - m + 1; ++i) out.emplace_back();
  return chunk_compose(out);
}

Partition backward(const Partition& sigma, int k, int m) {
  if (sigma.blocks() <= 1) return sigma;
  Chunks ch = chunk_decompose(sigma);
  int p = static_cast<int>(ch.chunks.size());
  std::vector<std::size_t> q;
  for (const auto& c : ch.chunks) q.push_back(c.size());
  std::vector<std::size_t> lens(p, 0);
  if (p < m) {
    lens = q;
  } else {
    for (int i = m; i <= p; ++i)
      if (q[i - 1]) throw InvariantError("thm12 inverse: chunk Q_i with i >= m is nonempty");
    for (int i = 1; i <= k - 1; ++i) lens[i - 1] = q[i - 1];
    for (int j = 1; j <= m - k; ++j) lens[p - m + k + j - 1] = q[k - 1 + j - 1];
  }
  SymbolSeq t = backward(ch.reduced, k, m).seq().shifted(1);
  return chunk_compose(split(t, lens));
}

}  // namespace

Partition thm12_map(const Partition& p, int k, int m) {
  check_params(k, m);
  if (contains(p.seq(), ones_two_ones(k, m - k))) throw PreconditionError("input contains 1^k 2 1^(m-k)");
  return forward(p, k, m);
}

Partition thm12_inverse(const Partition& p, int k, int m) {
  check_params(k, m);
  if (contains(p.seq(), ones_two_ones(m, 0))) throw PreconditionError("input contains 1^m 2");
  return backward(p, k, m);
}

}  // namespace partpat
