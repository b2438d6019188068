#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "contests/analysis.hpp"

using namespace contests;
using clk = std::chrono::steady_clock;

namespace {

double time_design(int players, int jobs) {
  auto t0 = clk::now();
  design_optimize(players, std::nullopt, PayoffKernel::tullock(), Objective::maximize, jobs);
  return std::chrono::duration<double>(clk::now() - t0).count();
}

double time_sweep(int n_max, int jobs) {
  auto t0 = clk::now();
  convergence_table(SweepFamily::sequential, 2, n_max, PayoffKernel::tullock(), jobs);
  return std::chrono::duration<double>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 8;
  int players = argc > 2 ? std::atoi(argv[2]) : 20;
  int n_max = argc > 3 ? std::atoi(argv[3]) : 40;

#ifdef _OPENMP
  printf("hardware threads available to OpenMP: %d\n", omp_get_num_procs());
#else
  printf("built without OpenMP, parallel runs fall back to serial\n");
#endif
  printf("design: partitions of %d players, serial vs %d jobs\n", players, jobs);
  double ds = time_design(players, 1);
  double dp = time_design(players, jobs);
  printf("  serial   %8.3f s\n  parallel %8.3f s  speedup %.2fx\n", ds, dp, ds / dp);

  printf("sweep: sequential family up to n=%d, serial vs %d jobs\n", n_max, jobs);
  double ss = time_sweep(n_max, 1);
  double sp = time_sweep(n_max, jobs);
  printf("  serial   %8.3f s\n  parallel %8.3f s  speedup %.2fx\n", ss, sp, ss / sp);
  return 0;
}
