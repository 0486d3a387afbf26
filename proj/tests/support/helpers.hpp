#pragma once

#include <set>
#include <vector>

#include "oracles.hpp"
#include "partpat/containment.hpp"
#include "partpat/seq.hpp"

namespace testutil {

inline oracle::Seq to_ints(const partpat::SymbolSeq& s) { return {s.begin(), s.end()}; }

inline partpat::Partition to_partition(const oracle::Seq& s) {
  std::vector<partpat::Symbol> v(s.begin(), s.end());
  return partpat::Partition::from(partpat::SymbolSeq(std::move(v)));
}

inline std::vector<partpat::Partition> avoiders(int n, const partpat::SymbolSeq& pat) {
  std::vector<partpat::Partition> out;
  for (auto& p : partpat::all_partitions(n))
    if (!partpat::contains(p.seq(), pat)) out.push_back(p);
  return out;
}

}  // namespace testutil
