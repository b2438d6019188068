#pragma once

#include <cstdint>
#include <vector>

#include "contests/contest.hpp"
#include "contests/kernel.hpp"

namespace contests {

struct GridSolution {
  double step = 0.0;
  std::vector<double> efforts;  // per player, each an integer multiple of step
  double total = 0.0;           // sum of efforts, exact in grid units
  std::uint64_t value_tables_digest = 0;
};

/// Brute-force SPE by backward induction on an effort grid, independent of the
/// inverted best-response machinery. States are cumulative effort rounded to
/// the grid; within-period simultaneous play is resolved by symmetric
/// best-response iteration. Guards: total players <= 5, periods <= 4,
/// step in [1e-4, 1e-2].
GridSolution grid_spe(const Contest& contest, const PayoffKernel& kernel, double step);

/// Symmetric simultaneous equilibrium total X = n g(X) by damped best-response
/// iteration on the continuous first-order condition.
double sim_fixed_point(int n, const PayoffKernel& kernel, double tol = 1e-12);

}  // namespace contests
