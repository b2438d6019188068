#pragma once

#include <string>
#include <vector>

#include "contests/recursion.hpp"

namespace contests {

enum class SolveStatus { Solved, NoInteriorCandidate, ConditionsUnverified };

std::string to_string(SolveStatus s);

struct EquilibriumSolution {
  Contest contest;
  std::string kernel_spec;
  SolveStatus status = SolveStatus::NoInteriorCandidate;
  double tol = 1e-12;

  double X_star = 0.0;
  bool exact = false;        // X_star (and efforts) are exact rationals
  Rational X_star_exact;

  std::vector<double> cumulative;  // X_t* = f_t(X*), t = 0..T
  std::vector<double> efforts;     // per player, period order
  std::vector<double> payoffs;     // x_i* h(X*)
  std::vector<Rational> efforts_exact;  // parallel to efforts when exact

  ConditionReport conditions;
};

/// Solve the contest to its subgame-perfect equilibrium candidate.
/// Status is NoInteriorCandidate when f_0 has no root in (0,1),
/// ConditionsUnverified when an interior root exists but Condition 1 could not
/// be confirmed, Solved otherwise.
EquilibriumSolution solve(const Contest& contest, const PayoffKernel& kernel,
                          double tol = 1e-12, PathMode mode = PathMode::Auto);

/// Unique X in [threshold_t, 1] with f_t(X) = X_t (bisection, tol 1e-12).
double invert_f(const FSequence& fseq, int t, double X_t);

/// Per-player equilibrium effort in period t given cumulative effort X_prev.
double best_response(const FSequence& fseq, int t, double X_prev);

struct SpeReport {
  double max_gain = 0.0;     // best payoff improvement any deviation achieved
  int worst_period = 0;      // period of the most profitable deviation
  double worst_deviation = 0.0;
  int grid = 0;
};

/// Numeric no-profitable-deviation audit: perturb one player's effort per
/// period over a grid, propagate later play through the best-response chain,
/// and report the maximum payoff gain found.
SpeReport verify_spe(const EquilibriumSolution& sol, const PayoffKernel& kernel,
                     int deviation_grid = 1000);

}  // namespace contests
