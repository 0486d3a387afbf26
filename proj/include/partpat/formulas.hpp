#pragma once

#include <vector>

#include "partpat/checked.hpp"

namespace partpat {

// Count sequences indexed from n = 0.
using SeqVector = std::vector<count_t>;

count_t binomial(int n, int k);
count_t bell(int n);
count_t stirling2(int n, int m);
count_t catalan(int n);

// partitions of [n] whose blocks all have fewer than k elements; equals p(n; 1^k)
count_t count_blocksize_lt(int k, int n);
SeqVector blocksize_lt_vector(int k, int n_max);

// partitions of [n] with fewer than k blocks; equals p(n; 12...k)
count_t count_blocks_lt(int k, int n);

// p(n; 1(tau+1)) from tau_counts[0..n-1]
count_t lift(const SeqVector& tau_counts, int n);
SeqVector lift_vector(const SeqVector& tau_counts, int n_max);

// tau counts back from sigma = 1(tau+1) counts: p(n; tau), needs sigma[0..n+1]
count_t lift_inverse(const SeqVector& sigma_counts, int n);
// The same quantity written with the alternating sum indexed from the top:
// p(n-1; tau) = sum_i (-1)^i C(n-1, i) p(n-i; sigma)
count_t lift_inverse_top(const SeqVector& sigma_counts, int n);

count_t t_closed(int n, int k);
count_t t_rec(int n, int k);

// p(n; 1 2^m)
count_t corollary_1222_egf_counts(int m, int n);

}  // namespace partpat
