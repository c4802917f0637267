// Benchmark: serial reference kernels vs. the OpenMP variants. Prints
// wall times and the speedup for the subset-lattice DPs and the
// exhaustive verifier.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "cha/enumerate.hpp"
#include "cha/setfam.hpp"
#include "cha/subsetdp.hpp"

using namespace cha;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_of(const std::function<void()>& body, int repeats) {
  auto start = Clock::now();
  for (int i = 0; i < repeats; ++i) body();
  return std::chrono::duration<double>(Clock::now() - start).count() / repeats;
}

void report(const char* name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
            << serial / parallel << "x\n";
}

}  // namespace

int main() {
  std::mt19937 rng(42);
  const int n = 12;
  std::vector<char> ind(std::size_t{1} << n);
  std::bernoulli_distribution coin(0.6);
  for (auto& bit : ind) bit = coin(rng);
  ind[0] = 1;

  volatile std::int64_t sink = 0;

  double zs = seconds_of([&] { sink = sink + zinv_table_serial(ind, n).back(); }, 5);
  double zp = seconds_of([&] { sink = sink + zinv_table_parallel(ind, n).back(); }, 5);
  report("zinv_table       (n=12)", zs, zp);

  double bs = seconds_of([&] { sink = sink + block_counts_serial(ind, n).back(); }, 5);
  double bp = seconds_of([&] { sink = sink + block_counts_parallel(ind, n).back(); }, 5);
  report("block_counts     (n=12)", bs, bp);

  double vs = seconds_of([&] { sink = sink + verify_theorems_serial(5, 4).total_clutters; }, 1);
  double vp = seconds_of([&] { sink = sink + verify_theorems_parallel(5, 4).total_clutters; }, 1);
  report("verify_theorems  (n=5) ", vs, vp);

  return sink == -1 ? 1 : 0;  // keep the results observable
}
