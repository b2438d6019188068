#include "contests/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "contests/errors.hpp"

namespace contests {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) {
    h ^= (v >> (8 * b)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

GridSolution grid_spe(const Contest& contest, const PayoffKernel& kernel, double step) {
  int T = contest.periods();
  if (contest.players() > 5 || T > 4)
    throw TooLarge("grid_spe: guard is players <= 5 and periods <= 4");
  if (!(step >= 1e-4 && step <= 1e-2))
    throw TooLarge("grid_spe: step must lie in [1e-4, 1e-2]");

  const int M = static_cast<int>(std::llround(1.0 / step));
  // h on the grid, including the X >= 1 tail where payoffs go negative.
  std::vector<double> hgrid(M + 1);
  for (int s = 0; s <= M; ++s) hgrid[s] = s == 0 ? 0.0 : kernel.h(s * step);

  // policy[t][s]: per-player grid effort in period t+1 at cumulative state s.
  // Efforts are capped at M - s, so states never exceed M.
  std::vector<std::vector<int>> policy(T, std::vector<int>(M, 0));

  // Final cumulative index when state s enters period t (0-based), everyone
  // following the computed policies.
  auto roll = [&](int t, int s) {
    for (int u = t; u < T; ++u) {
      if (s >= M) break;
      s += contest.n[u] * policy[u][s];
    }
    return std::min(s, M);
  };

  for (int t = T - 1; t >= 0; --t) {
    int nt = contest.n[t];
    std::vector<char> fail(M, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (int s = 0; s < M; ++s) {
      int cap = M - s;
      // symmetric fixed point: all nt players use the same grid best response
      auto br = [&](int y) {
        int best = 0;
        double best_u = 0.0;  // deviation 0 always yields payoff 0
        for (int d = 1; d <= cap; ++d) {
          int mid = s + (nt - 1) * y + d;
          double u = d * step * hgrid[roll(t + 1, std::min(mid, M))];
          if (u > best_u) {
            best_u = u;
            best = d;
          }
        }
        return best;
      };
      int y = 0;
      std::vector<int> hist{0};
      while (true) {
        int best = br(y);
        if (best == y) break;
        // damped update: the undamped map overshoots when several players
        // share the period, halving the step keeps it contracting
        int delta = best - y;
        int ynew = y + (delta + (delta > 0 ? 1 : -1)) / 2;
        auto rep = std::find(hist.begin(), hist.end(), ynew);
        if (rep != hist.end()) {
          // Oscillation around the fixed point: cycles within a couple of grid
          // units are the discretization of the symmetric equilibrium and
          // resolve to the most self-consistent member. Anything wider is a
          // genuine failure.
          auto first = rep - hist.begin();
          int lo = std::min(ynew, *std::min_element(hist.begin() + first, hist.end()));
          int hi = std::max(ynew, *std::max_element(hist.begin() + first, hist.end()));
          if (hi - lo <= 2) {
            int pick = lo, pick_err = std::abs(br(lo) - lo);
            for (int c = lo + 1; c <= hi; ++c) {
              int err = std::abs(br(c) - c);
              if (err < pick_err) {
                pick = c;
                pick_err = err;
              }
            }
            y = pick;
          } else {
            fail[s] = 1;
          }
          break;
        }
        hist.push_back(ynew);
        y = ynew;
      }
      policy[t][s] = y;
    }
    if (std::find(fail.begin(), fail.end(), 1) != fail.end())
      throw NoFixedPoint("grid_spe: within-period best-response iteration cycles");
  }

  GridSolution res;
  res.step = step;
  std::uint64_t h = 1469598103934665603ull;
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < M; ++s) h = fnv1a(h, static_cast<std::uint64_t>(policy[t][s]));
  res.value_tables_digest = h;

  int s = 0;
  long total_units = 0;
  for (int t = 0; t < T; ++t) {
    int e = s < M ? policy[t][s] : 0;
    for (int i = 0; i < contest.n[t]; ++i) res.efforts.push_back(e * step);
    total_units += static_cast<long>(contest.n[t]) * e;
    s += contest.n[t] * e;
  }
  res.total = total_units * step;
  return res;
}

double sim_fixed_point(int n, const PayoffKernel& kernel, double tol) {
  if (n < 2) throw std::invalid_argument("sim_fixed_point: need n >= 2");
  // damped iteration on X = n g(X); the damping shrinks when the residual grows
  double x = 0.5, lambda = 0.5;
  double resid = n * kernel.g(0, x) - x;
  for (int it = 0; it < 10000; ++it) {
    if (std::abs(resid) <= tol) return x;
    double nx = x + lambda * resid;
    nx = std::min(std::max(nx, 1e-12), 1.0 - 1e-12);
    double nresid = n * kernel.g(0, nx) - nx;
    // demand a real contraction, otherwise the damping is too aggressive
    // (an undamped 2-cycle decays arbitrarily slowly)
    if (std::abs(nresid) > 0.9 * std::abs(resid)) {
      lambda /= 2;
      if (lambda < 1e-12) break;
      continue;
    }
    x = nx;
    resid = nresid;
  }
  if (std::abs(resid) <= tol) return x;
  throw NoConvergence("sim_fixed_point: best-response iteration did not converge");
}

}  // namespace contests
