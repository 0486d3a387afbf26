#include "partpat/seq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "partpat/error.hpp"

namespace partpat {

namespace {

void check_symbols(const std::vector<Symbol>& s) {
  for (Symbol v : s)
    if (v == 0) throw PreconditionError("symbols must be positive");
}

}  // namespace

SymbolSeq::SymbolSeq(std::vector<Symbol> symbols) : s_(std::move(symbols)) { check_symbols(s_); }

SymbolSeq::SymbolSeq(std::initializer_list<int> symbols) {
  s_.reserve(symbols.size());
  for (int v : symbols) {
    if (v < 1 || v > 255) throw PreconditionError("symbol out of range 1..255");
    s_.push_back(static_cast<Symbol>(v));
  }
}

SymbolSeq SymbolSeq::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::vector<Symbol> out;
  if (text.empty()) return SymbolSeq(out);
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad symbol '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
      out.push_back(static_cast<Symbol>(c - '0'));
    }
    return SymbolSeq(out);
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > 255)
      throw ParseError("bad symbol \"" + std::string(tok) + "\"");
    out.push_back(static_cast<Symbol>(v));
    pos = comma + 1;
  }
  return SymbolSeq(out);
}

std::string format_symbols(std::span<const Symbol> s) {
  int mx = 0;
  for (Symbol v : s) mx = std::max<int>(mx, v);
  std::string out;
  if (mx <= 9) {
    for (Symbol v : s) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

std::string SymbolSeq::str() const { return format_symbols(s_); }

int SymbolSeq::max() const {
  int mx = 0;
  for (Symbol v : s_) mx = std::max<int>(mx, v);
  return mx;
}

SymbolSeq SymbolSeq::shifted(int delta) const {
  std::vector<Symbol> out;
  out.reserve(s_.size());
  for (Symbol v : s_) {
    int w = v + delta;
    if (w < 1 || w > 255) throw PreconditionError("shift leaves symbol range");
    out.push_back(static_cast<Symbol>(w));
  }
  return SymbolSeq(std::move(out));
}

SymbolSeq SymbolSeq::reversed() const { return SymbolSeq(std::vector<Symbol>(s_.rbegin(), s_.rend())); }

SymbolSeq SymbolSeq::slice(std::size_t from, std::size_t to) const {
  return SymbolSeq(std::vector<Symbol>(s_.begin() + from, s_.begin() + to));
}

SymbolSeq& SymbolSeq::operator+=(const SymbolSeq& o) {
  s_.insert(s_.end(), o.s_.begin(), o.s_.end());
  return *this;
}

SymbolSeq repeat(int sym, int count) {
  if (count < 0) throw PreconditionError("negative repeat count");
  if (sym < 1 || sym > 255) throw PreconditionError("symbol out of range");
  return SymbolSeq(std::vector<Symbol>(static_cast<std::size_t>(count), static_cast<Symbol>(sym)));
}

bool validate_partition(std::span<const Symbol> s) {
  int mx = 0;
  for (Symbol v : s) {
    if (v == 0 || v > mx + 1) return false;
    if (v == mx + 1) mx = v;
  }
  return true;
}

Partition Partition::from(SymbolSeq s) {
  if (!validate_partition(s)) throw PreconditionError("not a canonical sequence: " + s.str());
  Partition p;
  p.blocks_ = s.max();
  p.seq_ = std::move(s);
  return p;
}

Partition Partition::parse(std::string_view text) {
  SymbolSeq s = SymbolSeq::parse(text);
  if (!validate_partition(s)) throw ParseError("not a canonical sequence: " + std::string(text));
  return from(std::move(s));
}

PartitionStream::PartitionStream(int n, const SymbolSeq& prefix) : n_(n), fixed_(prefix.size()) {
  if (n < 0) throw PreconditionError("negative length");
  if (prefix.size() > static_cast<std::size_t>(n) || !validate_partition(prefix)) {
    done_ = true;
    return;
  }
  cur_.assign(prefix.begin(), prefix.end());
  cur_.resize(static_cast<std::size_t>(n), 1);
  pmax_.resize(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pmax_[i + 1] = std::max<int>(pmax_[i], cur_[i]);
}

bool PartitionStream::next(std::vector<Symbol>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = cur_;
    return true;
  }
  std::size_t lo = std::max<std::size_t>(fixed_, 1);
  std::size_t i = cur_.size();
  while (i > lo) {
    --i;
    if (cur_[i] <= pmax_[i]) {
      ++cur_[i];
      pmax_[i + 1] = std::max<int>(pmax_[i], cur_[i]);
      for (std::size_t j = i + 1; j < cur_.size(); ++j) {
        cur_[j] = 1;
        pmax_[j + 1] = pmax_[j];
      }
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_partition(int n, const std::function<void(const std::vector<Symbol>&)>& fn) {
  PartitionStream st(n);
  std::vector<Symbol> s;
  while (st.next(s)) fn(s);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Symbol>& s) { out.push_back(Partition::from(SymbolSeq(s))); });
  return out;
}

std::vector<std::vector<std::size_t>> blocks_of(const Partition& p) {
  std::vector<std::vector<std::size_t>> b(static_cast<std::size_t>(p.blocks()));
  for (std::size_t j = 0; j < p.size(); ++j) b[p[j] - 1].push_back(j + 1);
  return b;
}

Partition remove_first_block(const Partition& p) {
  std::vector<Symbol> out;
  for (Symbol v : p.seq())
    if (v != 1) out.push_back(static_cast<Symbol>(v - 1));
  return Partition::from(SymbolSeq(std::move(out)));
}

bool is_k_semicanonical(std::span<const Symbol> s, int m, int k) {
  if (k < 1 || k > std::max(m, 1)) return false;
  std::vector<int> f(m + 1, -1), l(m + 1, -1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    int v = s[j];
    if (v < 1 || v > m) return false;
    if (f[v] < 0) f[v] = static_cast<int>(j);
    l[v] = static_cast<int>(j);
  }
  for (int i = 1; i <= m; ++i)
    if (f[i] < 0) return false;
  for (int i = 1; i < k; ++i)
    for (int i2 = i + 1; i2 <= m; ++i2)
      if (f[i] >= f[i2]) return false;
  for (int i = k; i < m; ++i)
    if (l[i] >= l[i + 1]) return false;
  return true;
}

Partition canonicalize(std::span<const Symbol> s) {
  std::vector<Symbol> map(256, 0), out;
  int next = 0;
  out.reserve(s.size());
  for (Symbol v : s) {
    if (!map[v]) map[v] = static_cast<Symbol>(++next);
    out.push_back(map[v]);
  }
  return Partition::from(SymbolSeq(std::move(out)));
}

KSeq to_k_sequence(const Partition& p, int k) {
  int m = p.blocks();
  if (k < 1 || k > std::max(m, 1)) throw PreconditionError("level k out of range");
  std::vector<int> last(m + 1, -1);
  for (std::size_t j = 0; j < p.size(); ++j) last[p[j]] = static_cast<int>(j);
  std::vector<int> high;
  for (int b = k; b <= m; ++b) high.push_back(b);
  std::sort(high.begin(), high.end(), [&](int a, int b) { return last[a] < last[b]; });
  std::vector<Symbol> relabel(m + 1);
  for (int b = 1; b < k && b <= m; ++b) relabel[b] = static_cast<Symbol>(b);
  for (std::size_t i = 0; i < high.size(); ++i) relabel[high[i]] = static_cast<Symbol>(k + static_cast<int>(i));
  std::vector<Symbol> out;
  for (Symbol v : p.seq()) out.push_back(relabel[v]);
  return KSeq{SymbolSeq(std::move(out)), m, k};
}

Partition from_k_sequence(const KSeq& s) {
  if (!is_k_semicanonical(s.seq.view(), s.m, s.k) && !(s.m == 0 && s.seq.empty()))
    throw PreconditionError("not a k-semicanonical sequence");
  return canonicalize(s.seq.view());
}

SymbolSeq reverse_complement(const SymbolSeq& s, int m) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (auto it = s.symbols().rbegin(); it != s.symbols().rend(); ++it) {
    if (*it > m) throw PreconditionError("symbol exceeds alphabet size");
    out.push_back(static_cast<Symbol>(m + 1 - *it));
  }
  return SymbolSeq(std::move(out));
}

}  // namespace partpat
