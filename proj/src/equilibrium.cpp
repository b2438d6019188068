#include "contests/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "contests/errors.hpp"

namespace contests {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "Solved";
    case SolveStatus::NoInteriorCandidate:
      return "NoInteriorCandidate";
    case SolveStatus::ConditionsUnverified:
      return "ConditionsUnverified";
  }
  throw std::logic_error("unreachable");
}

EquilibriumSolution solve(const Contest& contest, const PayoffKernel& kernel, double tol,
                          PathMode mode) {
  FSequence fseq(contest, kernel, mode);
  int T = contest.periods();

  EquilibriumSolution sol;
  sol.contest = contest;
  sol.kernel_spec = kernel.spec_string();
  sol.tol = tol;
  sol.conditions.condition1 = check_condition1(fseq);
  sol.conditions.certified_by_monotonicity = sol.conditions.condition1.by_monotonicity;

  const Threshold& th0 = fseq.threshold(0);
  bool interior = th0.found && th0.value > 1e-10 && th0.value < 1.0;
  if (!interior) {
    sol.status = SolveStatus::NoInteriorCandidate;
    sol.X_star = 0.0;
    return sol;
  }

  sol.X_star = th0.value;
  if (!th0.exact) {
    // Newton polish: the bracket midpoint carries the bisection tolerance,
    // the root itself is simple (f_0' > 0 there) so a few steps reach
    // double-precision accuracy
    double x = sol.X_star;
    for (int it = 0; it < 4; ++it) {
      double dv = fseq.eval_deriv(0, x);
      if (!(dv > 0)) break;
      double step = fseq.eval(0, x) / dv;
      if (!std::isfinite(step) || std::abs(step) > 16 * tol) break;
      x -= step;
      if (!(x > 0 && x < 1)) {
        x += step;
        break;
      }
    }
    sol.X_star = x;
  }
  sol.exact = th0.exact && fseq.exact();
  if (th0.exact) sol.X_star_exact = th0.exact_value;
  sol.conditions.condition2 = check_condition2(fseq.gseq(), sol.X_star);
  sol.status = sol.conditions.condition1.pass ? SolveStatus::Solved
                                              : SolveStatus::ConditionsUnverified;

  sol.cumulative.resize(T + 1);
  if (sol.exact) {
    std::vector<Rational> cum(T + 1);
    for (int t = 0; t <= T; ++t) {
      cum[t] = fseq.poly(t).eval(sol.X_star_exact);
      sol.cumulative[t] = to_double(cum[t]);
    }
    for (int t = 1; t <= T; ++t) {
      Rational x = (cum[t] - cum[t - 1]) / contest.n[t - 1];
      for (int i = 0; i < contest.n[t - 1]; ++i) {
        sol.efforts_exact.push_back(x);
        sol.efforts.push_back(to_double(x));
      }
    }
  } else {
    for (int t = 0; t <= T; ++t) sol.cumulative[t] = fseq.eval(t, sol.X_star);
    sol.cumulative[0] = 0.0;  // f_0(X*) = 0 up to root tolerance
    for (int t = 1; t <= T; ++t) {
      double x = (sol.cumulative[t] - sol.cumulative[t - 1]) / contest.n[t - 1];
      for (int i = 0; i < contest.n[t - 1]; ++i) sol.efforts.push_back(x);
    }
  }
  double hx = kernel.h(sol.X_star);
  for (double x : sol.efforts) sol.payoffs.push_back(x * hx);
  return sol;
}

double invert_f(const FSequence& fseq, int t, double X_t) {
  if (!(X_t >= 0.0 && X_t <= 1.0)) throw OutOfRange("invert_f: target outside [0,1]");
  if (X_t == 1.0) return 1.0;
  double lo = fseq.threshold(t).value, hi = 1.0;
  if (X_t <= 0.0) return lo;
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    double mid = (lo + hi) / 2;
    if (fseq.eval(t, mid) < X_t)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

double best_response(const FSequence& fseq, int t, double X_prev) {
  if (t < 1 || t > fseq.T()) throw std::invalid_argument("best_response: bad period");
  if (X_prev >= 1.0) return 0.0;
  if (X_prev < 0.0) throw OutOfRange("best_response: negative cumulative effort");
  double X = invert_f(fseq, t - 1, X_prev);
  double x = (fseq.eval(t, X) - X_prev) / fseq.contest().n[t - 1];
  return x > 0.0 ? x : 0.0;
}

SpeReport verify_spe(const EquilibriumSolution& sol, const PayoffKernel& kernel,
                     int deviation_grid) {
  if (sol.status != SolveStatus::Solved)
    throw std::invalid_argument("verify_spe requires a solved contest");
  FSequence fseq(sol.contest, kernel);
  int T = sol.contest.periods();
  SpeReport rep;
  rep.grid = deviation_grid;
  rep.max_gain = -1e300;

  int offset = 0;
  for (int t = 1; t <= T; ++t) {
    int nt = sol.contest.n[t - 1];
    double x_eq = sol.efforts[offset];
    double u_eq = sol.payoffs[offset];
    double X_prev = sol.cumulative[t - 1];
    double cap = 1.0 - X_prev;
    for (int j = 0; j < deviation_grid; ++j) {
      double d = cap * j / (deviation_grid - 1);
      double X_cur = X_prev + (nt - 1) * x_eq + d;
      for (int s = t + 1; s <= T; ++s)
        X_cur += sol.contest.n[s - 1] * best_response(fseq, s, X_cur);
      double u_dev = d == 0.0 ? 0.0 : d * kernel.h(X_cur);
      double gain = u_dev - u_eq;
      if (gain > rep.max_gain) {
        rep.max_gain = gain;
        rep.worst_period = t;
        rep.worst_deviation = d;
      }
    }
    offset += nt;
  }
  return rep;
}

}  // namespace contests
