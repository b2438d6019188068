#include "contests/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "contests/errors.hpp"

namespace contests {

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::a_dominates:
      return "a_dominates";
    case Dominance::b_dominates:
      return "b_dominates";
    case Dominance::equal:
      return "equal";
    case Dominance::incomparable:
      return "incomparable";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(MoverVerdict v) {
  switch (v) {
    case MoverVerdict::strict_earlier_advantage:
      return "strict_earlier_advantage";
    case MoverVerdict::flat:
      return "flat";
    case MoverVerdict::later_advantage:
      return "later_advantage";
    case MoverVerdict::mixed:
      return "mixed";
  }
  throw std::logic_error("unreachable");
}

ComparisonResult compare(const Contest& a, const Contest& b, const PayoffKernel& kernel) {
  ComparisonResult res;
  res.contest_a = a;
  res.contest_b = b;
  res.S_a = info_measures(a);
  res.S_b = info_measures(b);

  size_t len = std::max(res.S_a.S.size(), res.S_b.S.size());
  bool a_ge = true, b_ge = true, all_eq = true;
  for (size_t k = 0; k < len; ++k) {
    BigInt sa = k < res.S_a.S.size() ? res.S_a.S[k] : BigInt(0);
    BigInt sb = k < res.S_b.S.size() ? res.S_b.S[k] : BigInt(0);
    if (sa < sb) a_ge = false;
    if (sb < sa) b_ge = false;
    if (sa != sb) all_eq = false;
  }
  if (all_eq)
    res.dominance = Dominance::equal;
  else if (a_ge)
    res.dominance = Dominance::a_dominates;
  else if (b_ge)
    res.dominance = Dominance::b_dominates;
  else
    res.dominance = Dominance::incomparable;

  res.X_a = solve(a, kernel).X_star;
  res.X_b = solve(b, kernel).X_star;
  switch (res.dominance) {
    case Dominance::equal:
      res.consistent_with_theorem = std::abs(res.X_a - res.X_b) <= 1e-10;
      break;
    case Dominance::a_dominates:
      res.consistent_with_theorem = res.X_a > res.X_b - 1e-12;
      break;
    case Dominance::b_dominates:
      res.consistent_with_theorem = res.X_b > res.X_a - 1e-12;
      break;
    case Dominance::incomparable:
      res.consistent_with_theorem = true;  // the theorem is silent here
      break;
  }
  return res;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Contest>& out) {
  if (remaining == 0) {
    out.push_back(Contest{cur});
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (static_cast<long>(p) * parts_left < remaining) break;
    cur.push_back(p);
    partitions_rec(remaining - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, int parts_left, std::vector<int>& cur,
                      std::vector<Contest>& out) {
  if (remaining == 0) {
    out.push_back(Contest{cur});
    return;
  }
  if (parts_left == 0) return;
  for (int p = 1; p <= remaining; ++p) {
    cur.push_back(p);
    compositions_rec(remaining - p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<int> sorted_parts(const Contest& c) {
  std::vector<int> s = c.n;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

DesignResult design_optimize(int players, std::optional<int> T_max,
                             const PayoffKernel& kernel, Objective objective, int jobs,
                             bool compositions) {
  if (players < 1) throw std::invalid_argument("design_optimize: players must be >= 1");
  int tmax = T_max.value_or(players);
  if (tmax < 1) throw std::invalid_argument("design_optimize: max periods must be >= 1");

  std::vector<Contest> candidates;
  std::vector<int> cur;
  if (compositions)
    compositions_rec(players, tmax, cur, candidates);
  else
    partitions_rec(players, players, tmax, cur, candidates);

  std::vector<double> values(candidates.size());
  std::vector<char> ok(candidates.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
  for (size_t i = 0; i < candidates.size(); ++i) {
    auto sol = solve(candidates[i], kernel);
    if (sol.status != SolveStatus::NoInteriorCandidate) {
      values[i] = sol.X_star;
      ok[i] = 1;
    }
  }

  DesignResult res;
  res.objective = objective;
  res.players = players;
  res.T_max = T_max;
  res.evaluated_count = static_cast<long>(candidates.size());
  bool have = false;
  double best = 0;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!ok[i]) continue;
    bool better;
    if (!have) {
      better = true;
    } else if (objective == Objective::maximize) {
      better = values[i] > best + 1e-12;
    } else {
      better = values[i] < best - 1e-12;
    }
    if (!better && have && std::abs(values[i] - best) <= 1e-12) {
      // deterministic tie-break: lexicographically smallest sorted contest
      better = sorted_parts(candidates[i]) < sorted_parts(res.best_contest);
    }
    if (better) {
      have = true;
      best = values[i];
      res.best_contest = candidates[i];
      res.best_value = values[i];
    }
  }
  if (!have) throw NoRootInUnit("no candidate contest has an interior equilibrium");
  return res;
}

ApproxSolution large_contest_approx(const Contest& contest, const PayoffKernel& kernel) {
  double alpha = kernel.alpha();
  ApproxSolution res;
  double prod = 1.0;
  for (int nt : contest.n) {
    double before = prod;
    prod *= 1.0 + alpha * nt;
    for (int i = 0; i < nt; ++i) res.efforts_approx.push_back(alpha / (before * (1.0 + alpha * nt)));
  }
  res.S_weighted = prod - 1.0;
  res.X_star_approx = 1.0 - 1.0 / prod;
  res.hhi_approx = alpha * alpha / ((1.0 + alpha) * (1.0 + alpha) - 1.0);
  return res;
}

SimSizeResult equivalent_sim_size(int n_seq) {
  if (n_seq < 2) throw std::invalid_argument("equivalent_sim_size: need n_seq >= 2");
  Contest seq{std::vector<int>(n_seq, 1)};
  SimSizeResult res;
  res.X_seq = solve(seq, PayoffKernel::tullock()).X_star;
  res.approx = std::pow(2.0, n_seq);
  res.exact = static_cast<long>(std::floor(1.0 / (1.0 - res.X_seq) + 1e-9));
  return res;
}

EarlierMoverReport earlier_mover_report(const EquilibriumSolution& sol,
                                        const PayoffKernel& kernel) {
  if (sol.status != SolveStatus::Solved)
    throw std::invalid_argument("earlier_mover_report requires a solved contest");
  EarlierMoverReport rep;
  int T = sol.contest.periods();
  int off = 0;
  for (int t = 1; t <= T; ++t) {
    rep.period_efforts.push_back(sol.efforts[off]);
    off += sol.contest.n[t - 1];
  }

  FSequence fseq(sol.contest, kernel);
  for (int t = 1; t < T; ++t) {
    rep.gaps_direct.push_back(rep.period_efforts[t - 1] - rep.period_efforts[t]);
    // x_t - x_{t+1} = sum_k [S_k(n^t) - S_k(n^{t+1})] g_{k+1}(X*), S_0 terms cancel
    const auto& St = fseq.suffix_S(t);
    const auto& St1 = fseq.suffix_S(t + 1);
    double gap = 0.0;
    for (size_t k = 1; k <= St.size(); ++k) {
      double dS = to_double(St[k - 1]) - (k - 1 < St1.size() ? to_double(St1[k - 1]) : 0.0);
      gap += dS * fseq.gseq().eval(static_cast<int>(k) + 1, sol.X_star);
    }
    rep.gaps_formula.push_back(gap);
    rep.max_formula_error =
        std::max(rep.max_formula_error, std::abs(gap - rep.gaps_direct.back()));
  }

  bool all_pos = true, all_neg = true, all_zero = true;
  for (double g : rep.gaps_direct) {
    if (g < 1e-12) all_pos = false;
    if (g > -1e-12) all_neg = false;
    if (std::abs(g) > 1e-12) all_zero = false;
  }
  if (T == 1 || all_zero)
    rep.verdict = MoverVerdict::flat;
  else if (all_pos)
    rep.verdict = MoverVerdict::strict_earlier_advantage;
  else if (all_neg)
    rep.verdict = MoverVerdict::later_advantage;
  else
    rep.verdict = MoverVerdict::mixed;
  return rep;
}

SweepFamily sweep_family_from_string(const std::string& name) {
  if (name == "seq") return SweepFamily::sequential;
  if (name == "half") return SweepFamily::half_and_half;
  if (name == "leader") return SweepFamily::single_leader;
  if (name == "sim") return SweepFamily::simultaneous;
  throw std::invalid_argument("unknown sweep family: " + name);
}

std::vector<SweepRow> convergence_table(SweepFamily family, int n_min, int n_max,
                                        const PayoffKernel& kernel, int jobs) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad sweep range");
  std::vector<SweepRow> rows(n_max - n_min + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
  for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
    int n = n_min + idx;
    Contest c;
    switch (family) {
      case SweepFamily::sequential:
        c.n.assign(n, 1);
        break;
      case SweepFamily::half_and_half:
        c.n = {(n + 1) / 2, n / 2};
        if (c.n[1] == 0) c.n.pop_back();
        break;
      case SweepFamily::single_leader:
        c.n = n > 1 ? std::vector<int>{1, n - 1} : std::vector<int>{1};
        break;
      case SweepFamily::simultaneous:
        c.n = {n};
        break;
    }
    SweepRow row;
    row.n = n;
    row.contest = c;
    row.X_star = solve(c, kernel).X_star;
    row.one_minus_X = 1.0 - row.X_star;
    row.S_weighted = info_measures(c).weighted_total(kernel.alpha());
    rows[idx] = row;
  }
  return rows;
}

}  // namespace contests
