#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contests/equilibrium.hpp"

namespace contests {

enum class Dominance { a_dominates, b_dominates, equal, incomparable };

std::string to_string(Dominance d);

struct ComparisonResult {
  Contest contest_a, contest_b;
  InfoMeasures S_a, S_b;
  Dominance dominance = Dominance::incomparable;
  double X_a = 0.0, X_b = 0.0;
  bool consistent_with_theorem = false;
};

/// Elementwise comparison of information measures (shorter vectors padded with
/// zeros) together with the solved totals and a check of the theorem's
/// predicted direction.
ComparisonResult compare(const Contest& a, const Contest& b, const PayoffKernel& kernel);

enum class Objective { minimize, maximize };

struct DesignResult {
  Objective objective = Objective::maximize;
  int players = 0;
  std::optional<int> T_max;
  Contest best_contest;
  double best_value = 0.0;
  long evaluated_count = 0;
};

/// Searches disclosure structures with the given total player count for the
/// extreme total effort. Enumerates integer partitions (order is irrelevant by
/// permutation invariance) unless compositions is set. jobs > 1 enables
/// parallel evaluation; results are reduced deterministically.
DesignResult design_optimize(int players, std::optional<int> T_max,
                             const PayoffKernel& kernel, Objective objective,
                             int jobs = 1, bool compositions = false);

struct ApproxSolution {
  double X_star_approx = 0.0;          // 1 - 1/prod(1 + alpha n_t); exact for linear g
  std::vector<double> efforts_approx;  // alpha / prod_{s<=t}(1 + alpha n_s), per player
  double hhi_approx = 0.0;             // alpha^2 / ((1+alpha)^2 - 1)
  double S_weighted = 0.0;             // S(n) = prod(1 + alpha n_t) - 1
};

ApproxSolution large_contest_approx(const Contest& contest, const PayoffKernel& kernel);

struct SimSizeResult {
  double approx = 0.0;  // 2^n_seq (Tullock heuristic)
  long exact = 0;       // largest m with (m-1)/m <= X* of the sequential contest
  double X_seq = 0.0;
};

/// How many simultaneous Tullock players match the total effort of n_seq
/// fully sequential ones.
SimSizeResult equivalent_sim_size(int n_seq);

enum class MoverVerdict { strict_earlier_advantage, flat, later_advantage, mixed };

std::string to_string(MoverVerdict v);

struct EarlierMoverReport {
  MoverVerdict verdict = MoverVerdict::flat;
  std::vector<double> period_efforts;      // per-player effort by period
  std::vector<double> gaps_direct;         // x_t - x_{t+1}
  std::vector<double> gaps_formula;        // sum_k [S_k(n^t) - S_k(n^{t+1})] g_{k+1}(X*)
  double max_formula_error = 0.0;
};

EarlierMoverReport earlier_mover_report(const EquilibriumSolution& sol,
                                        const PayoffKernel& kernel);

enum class SweepFamily { sequential, half_and_half, single_leader, simultaneous };

SweepFamily sweep_family_from_string(const std::string& name);  // seq|half|leader|sim

struct SweepRow {
  int n = 0;
  Contest contest;
  double X_star = 0.0;
  double one_minus_X = 0.0;
  double S_weighted = 0.0;
};

std::vector<SweepRow> convergence_table(SweepFamily family, int n_min, int n_max,
                                        const PayoffKernel& kernel, int jobs = 1);

}  // namespace contests
