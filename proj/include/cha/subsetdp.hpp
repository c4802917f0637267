#pragma once

#include <cstdint>
#include <vector>

#include "cha/setfam.hpp"

// Dynamic programming over the subset lattice of [0, n). These are the
// hot kernels of the library: everything exponential funnels through
// them. Each has a serial reference implementation and an OpenMP
// variant that processes one popcount level at a time; the benchmark
// target compares the two.

namespace cha {

// table[mask] = 1 iff H|_mask is discrete (no edge inside mask).
std::vector<char> independence_table(const Hypergraph& h);

// Mobius character of every restriction: out[mask] = zeta^{-1}(H|_mask)
// = sum over ordered decompositions of mask into nonempty independent
// blocks of (-1)^#blocks. ind is an indicator over all 2^n masks (1 =
// the block is allowed). O(3^n).
std::vector<std::int64_t> zinv_table_serial(const std::vector<char>& ind, int n);
std::vector<std::int64_t> zinv_table_parallel(const std::vector<char>& ind, int n);
std::vector<std::int64_t> zinv_table(const std::vector<char>& ind, int n);

// counts[k] = number of ordered decompositions of the full vertex set
// into exactly k nonempty allowed blocks, k = 0..n. O(n * 3^n).
std::vector<std::int64_t> block_counts_serial(const std::vector<char>& ind, int n);
std::vector<std::int64_t> block_counts_parallel(const std::vector<char>& ind, int n);
std::vector<std::int64_t> block_counts(const std::vector<char>& ind, int n);

// Number of ordered decompositions of the full set into allowed blocks
// of the prescribed sizes (in order). Blocks are nonempty by
// composition convention (all parts >= 1).
std::int64_t sized_decomposition_count(const std::vector<char>& ind, int n,
                                       const std::vector<int>& parts);

}  // namespace cha
