#include "cha/subsetdp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cha {

std::vector<char> independence_table(const Hypergraph& h) {
  if (h.n > kMaxVertices) throw BoundError("subset DP limited to n <= " + std::to_string(kMaxVertices));
  const std::size_t size = std::size_t{1} << h.n;
  std::vector<char> has_edge(size, 0);
  for (Mask e : h.edges) has_edge[e] = 1;
  // superset closure, one bit at a time
  for (int b = 0; b < h.n; ++b)
    for (std::size_t mask = 0; mask < size; ++mask)
      if ((mask >> b) & 1) has_edge[mask] |= has_edge[mask ^ (std::size_t{1} << b)];
  for (auto& x : has_edge) x = !x;
  return has_edge;
}

// Masks of [0, 2^n) grouped by popcount, ascending.
static std::vector<std::vector<Mask>> popcount_levels(int n) {
  std::vector<std::vector<Mask>> levels(n + 1);
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) levels[popcount(mask)].push_back(mask);
  return levels;
}

static std::int64_t zinv_cell(const std::vector<char>& ind, const std::vector<std::int64_t>& f, Mask mask) {
  std::int64_t acc = 0;
  for (Mask s = mask; s; s = (s - 1) & mask)
    if (ind[s]) acc -= f[mask ^ s];
  return acc;
}

std::vector<std::int64_t> zinv_table_serial(const std::vector<char>& ind, int n) {
  std::vector<std::int64_t> f(std::size_t{1} << n, 0);
  f[0] = 1;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) f[mask] = zinv_cell(ind, f, mask);
  return f;
}

std::vector<std::int64_t> zinv_table_parallel(const std::vector<char>& ind, int n) {
  std::vector<std::int64_t> f(std::size_t{1} << n, 0);
  f[0] = 1;
  auto levels = popcount_levels(n);
  for (int level = 1; level <= n; ++level) {
    const auto& masks = levels[level];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < (std::int64_t)masks.size(); ++i)
      f[masks[i]] = zinv_cell(ind, f, masks[i]);
  }
  return f;
}

std::vector<std::int64_t> zinv_table(const std::vector<char>& ind, int n) {
  return n >= 10 ? zinv_table_parallel(ind, n) : zinv_table_serial(ind, n);
}

static std::int64_t block_cell(const std::vector<char>& ind, const std::vector<std::int64_t>& prev, Mask mask) {
  std::int64_t acc = 0;
  for (Mask s = mask; s; s = (s - 1) & mask)
    if (ind[s]) acc += prev[mask ^ s];
  return acc;
}

std::vector<std::int64_t> block_counts_serial(const std::vector<char>& ind, int n) {
  const std::size_t size = std::size_t{1} << n;
  const Mask full = full_mask(n);
  std::vector<std::int64_t> prev(size, 0), cur(size, 0), counts(n + 1, 0);
  prev[0] = 1;
  counts[0] = n == 0 ? 1 : 0;
  for (int k = 1; k <= n; ++k) {
    for (Mask mask = 0; mask < (Mask)size; ++mask) cur[mask] = block_cell(ind, prev, mask);
    counts[k] = cur[full];
    std::swap(prev, cur);
  }
  return counts;
}

std::vector<std::int64_t> block_counts_parallel(const std::vector<char>& ind, int n) {
  const std::size_t size = std::size_t{1} << n;
  const Mask full = full_mask(n);
  std::vector<std::int64_t> prev(size, 0), cur(size, 0), counts(n + 1, 0);
  prev[0] = 1;
  counts[0] = n == 0 ? 1 : 0;
  for (int k = 1; k <= n; ++k) {
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < (std::int64_t)size; ++mask)
      cur[mask] = block_cell(ind, prev, mask);
    counts[k] = cur[full];
    std::swap(prev, cur);
  }
  return counts;
}

std::vector<std::int64_t> block_counts(const std::vector<char>& ind, int n) {
  return n >= 10 ? block_counts_parallel(ind, n) : block_counts_serial(ind, n);
}

std::int64_t sized_decomposition_count(const std::vector<char>& ind, int n,
                                       const std::vector<int>& parts) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int64_t> prev(size, 0), cur(size, 0);
  prev[0] = 1;
  for (int a : parts) {
    std::fill(cur.begin(), cur.end(), 0);
    for (Mask mask = 0; mask < (Mask)size; ++mask) {
      if (popcount(mask) < a) continue;
      std::int64_t acc = 0;
      for (Mask s = mask; s; s = (s - 1) & mask)
        if (popcount(s) == a && ind[s]) acc += prev[mask ^ s];
      cur[mask] = acc;
    }
    std::swap(prev, cur);
  }
  return prev[full_mask(n)];
}

}  // namespace cha
