#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contests/contest.hpp"
#include "contests/kernel.hpp"
#include "contests/poly.hpp"

namespace contests {

inline constexpr double kEpsCond = 1e-9;

/// Discouragement sequence g_1 = g, g_{k+1} = -g_k' g.
class GSequence {
 public:
  GSequence(PayoffKernel kernel, int T);

  int T() const { return T_; }
  const PayoffKernel& kernel() const { return kernel_; }
  bool exact() const { return !polys_.empty(); }
  /// g_k as an exact polynomial (polynomial kernels only), k = 1..T.
  const Poly& poly(int k) const { return polys_.at(k - 1); }

  /// g_k(X), k = 1..T.
  double eval(int k, double X) const;
  /// d/dX g_k(X).
  double eval_deriv(int k, double X) const;

  /// Derivative tower: row k (1-based) holds g_k^(j)(X) for j = 0..orders-k.
  std::vector<std::vector<double>> tower(double X, int orders) const;

 private:
  PayoffKernel kernel_;
  int T_;
  std::vector<Poly> polys_;  // exact path
};

GSequence build_g_sequence(const PayoffKernel& kernel, int T);

enum class PathMode { Auto, Exact, Float };

struct Threshold {
  double value = 0.0;
  bool found = false;
  bool exact = false;     // value is an exact rational
  Rational exact_value;   // valid when exact
  Rational lo, hi;        // certified bracket (exact path)
};

/// The inverted best-response sequence f_T,...,f_0 with thresholds.
/// Built by the recursion f_{t-1} = f_t - n_t f_t' g and cross-checked against
/// the measure representation f_t = X - sum_k S_k(n^t) g_k at construction.
class FSequence {
 public:
  FSequence(Contest contest, PayoffKernel kernel, PathMode mode = PathMode::Auto);

  const Contest& contest() const { return contest_; }
  const PayoffKernel& kernel() const { return kernel_; }
  const GSequence& gseq() const { return gseq_; }
  int T() const { return contest_.periods(); }
  bool exact() const { return !fpolys_.empty(); }

  /// f_t as an exact polynomial (exact path only), t = 0..T.
  const Poly& poly(int t) const { return fpolys_.at(t); }
  /// S_k(n^t) for k = 1..T-t.
  const std::vector<BigInt>& suffix_S(int t) const { return suffix_S_.at(t); }

  double eval(int t, double X) const;
  double eval_deriv(int t, double X) const;
  /// Independent evaluation through the raw recursion tower (no g_k's);
  /// used to cross-check the measure representation.
  double eval_recursive(int t, double X) const;

  /// Highest root of f_t in [0,1); not found means f_t > 0 on (0,1).
  const Threshold& threshold(int t) const { return thresholds_.at(t); }

 private:
  void build_exact();
  void build_general();

  Contest contest_;
  PayoffKernel kernel_;
  GSequence gseq_;
  std::vector<std::vector<BigInt>> suffix_S_;
  std::vector<double> suffix_S_dbl_flat_;  // row t at offset t*T
  std::vector<Poly> fpolys_;               // exact path, index t = 0..T
  std::vector<Threshold> thresholds_;      // index t = 0..T
  // float-path caches for polynomial kernels (double coefficients, low first)
  std::vector<std::vector<double>> gk_dbl_, gk_deriv_dbl_, g_chain_dbl_;
};

FSequence build_f_sequence(const Contest& contest, const PayoffKernel& kernel,
                           PathMode mode = PathMode::Auto);

struct Condition1Report {
  bool pass = false;
  bool certified = false;  // exact-arithmetic certificate (else verified on grid)
  bool by_monotonicity = false;
  struct PeriodWitness {
    int t;
    double threshold;
    bool root_found;
    bool sign_ok;      // f_t < 0 strictly between consecutive thresholds
    bool monotone_ok;  // f_t strictly increasing on [threshold_t, 1]
  };
  std::vector<PeriodWitness> witnesses;
  bool x0_interior = false;  // threshold of f_0 lies in (0,1)
};

enum class Cond2Verdict { Pass, Boundary, Fail };

std::string to_string(Cond2Verdict v);

struct Condition2Report {
  Cond2Verdict verdict = Cond2Verdict::Pass;
  std::vector<double> gk_values;  // g_k(X*) for k = 2..T
  std::optional<int> first_nonpositive_k;
};

struct ConditionReport {
  Condition1Report condition1;
  Condition2Report condition2;
  bool certified_by_monotonicity = false;
};

Condition1Report check_condition1(const FSequence& fseq);
Condition2Report check_condition2(const GSequence& gseq, double Xstar);

}  // namespace contests
